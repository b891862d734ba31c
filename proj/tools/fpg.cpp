// fpg: build and check finitely presented groups from the command line.
//
// Output starts with key: value lines. Exit codes: 0 success, 1 domain
// error, 2 usage or parse error, 3 enumeration limit reached.

#include "fpg/amalgam.hpp"
#include "fpg/constructions.hpp"
#include "fpg/coset_enum.hpp"
#include "fpg/errors.hpp"
#include "fpg/presentation.hpp"
#include "fpg/subgroup_graph.hpp"
#include "fpg/turing.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace fpg;

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;
constexpr int kIndeterminate = 3;

struct Options {
  std::string pres;
  std::string word;
  std::string tm;
  std::uint64_t input = 0;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t max_len = 6;
  std::size_t max_steps = 1000;
  std::string out;
  std::uint64_t seed = 0;
  bool check_trivial = false;
  std::uint64_t torsion = 0;
  std::vector<std::string> attach;
  std::vector<std::string> gens;
  std::vector<std::string> marked;
  std::vector<std::string> subgroup;
  bool kill = false;
  bool uce = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Presentation load(const std::string& path) {
  if (path.empty()) throw UsageError("--pres is required");
  return parse_presentation(read_file(path));
}

Word required_word(const Options& o) {
  if (o.word.empty()) throw UsageError("--word is required");
  return parse_word(o.word);
}

TuringMachine load_machine(const Options& o) {
  if (o.tm.empty()) throw UsageError("--tm is required");
  return parse_turing_machine(read_file(o.tm));
}

void line(const std::string& key, const std::string& value) {
  std::cout << key << ": " << value << "\n";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void report(const Presentation& p) {
  line("generators", std::to_string(p.generators().size()));
  line("relators", std::to_string(p.relators().size()));
  line("h1", to_string(h1(p)));
  line("class_p", yes_no(verify_class_P(p.effective_trace())));
}

// Writes to --out, or after the report when no path is given.
void output(const Options& o, const Presentation& p) {
  if (o.out.empty()) {
    std::cout << "\n" << emit(p) << "\n";
    return;
  }
  {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << emit(p) << "\n";
  }
  line("written", o.out);
  line("roundtrip", yes_no(load(o.out) == p));
}

int finish_order(const EnumerationResult& r) {
  if (!r.completed()) {
    line("order", "indeterminate");
    line("limit", std::to_string(r.limit));
    return kIndeterminate;
  }
  line("order", std::to_string(r.index));
  line("cosets_used", std::to_string(r.cosets_used));
  return kOk;
}

WitnessOptions witness_options(const Options& o) {
  WitnessOptions opts;
  if (o.torsion != 0) opts.torsion_order = BigInt(o.torsion);
  return opts;
}

int build_witness(const Options& o) {
  Presentation p = load(o.pres);
  Presentation w = witness(p, required_word(o), witness_options(o));
  report(w);
  output(o, w);
  return kOk;
}

int build_kill_h1(const Options& o) {
  Presentation p = load(o.pres);
  line("attachments", std::to_string(h1_generators(p).size()));
  Presentation k = kill_h1(p);
  report(k);
  output(o, k);
  return kOk;
}

// PATH:WORD:GEN
Attachment parse_attachment(const std::string& spec) {
  auto last = spec.rfind(':');
  auto mid = last == std::string::npos ? last : spec.rfind(':', last - 1);
  if (mid == std::string::npos || mid == 0) {
    throw UsageError("--attach expects PATH:WORD:GENERATOR, got " + spec);
  }
  return {load(spec.substr(0, mid)), parse_word(spec.substr(mid + 1, last - mid - 1)),
          Generator(spec.substr(last + 1))};
}

int build_join(const Options& o) {
  Presentation base = load(o.pres);
  if (o.attach.empty()) throw UsageError("--attach is required");
  std::vector<Attachment> atts;
  for (const auto& a : o.attach) atts.push_back(parse_attachment(a));
  Presentation j = amalgam_join(base, atts);
  report(j);
  output(o, j);
  return kOk;
}

int build_uce(const Options& o) {
  Presentation u = universal_central_extension(load(o.pres));
  report(u);
  output(o, u);
  return kOk;
}

int build_tm2group(const Options& o) {
  MachineGroup g(load_machine(o));
  line("rules", std::to_string(g.rule_count()));
  report(g.presentation());
  Word w = g.word(o.input);
  line("input", binary_input(o.input));
  line("word_length", std::to_string(w.letter_count()));
  line("word", to_string(w));
  output(o, g.presentation());
  return kOk;
}

int build_pipeline(const Options& o) {
  MachineGroup g(load_machine(o));
  const std::string tape = binary_input(o.input);
  const Word w = g.word(tape);
  Presentation stage = witness(g.presentation(), w, witness_options(o));
  line("input", tape);
  line("word_length", std::to_string(w.letter_count()));
  auto run = simulate(g.machine(), tape, o.max_steps);
  if (auto* h = std::get_if<Halted>(&run)) {
    line("halts", "true");
    line("steps", std::to_string(h->steps));
  } else {
    line("halts", detect_cycle(g.machine(), tape, o.max_steps) ? "false"
                                                               : "unknown");
  }
  int code = kOk;
  if (o.check_trivial) {
    auto cert = o.torsion == 0 ? g.halting_certificate(tape, o.max_steps)
                               : std::nullopt;
    if (cert) {
      line("route", "certified");
      Presentation aided =
          add_witness_consequences(stage, g.presentation(), w, *cert);
      code = finish_order(order(aided, o.max_cosets));
    } else {
      line("route", "direct");
      code = finish_order(order(stage, o.max_cosets));
    }
  }
  if (o.kill) stage = kill_h1(stage);
  if (o.uce) stage = universal_central_extension(stage);
  report(stage);
  if (!o.out.empty()) output(o, stage);
  return code;
}

int check_h1(const Options& o) {
  auto inv = h1(load(o.pres));
  line("rank", std::to_string(inv.free_rank));
  std::string torsion;
  for (const auto& d : inv.torsion) {
    if (!torsion.empty()) torsion += " ";
    torsion += d.str();
  }
  line("torsion", torsion.empty() ? "none" : torsion);
  line("h1", to_string(inv));
  return kOk;
}

int check_order(const Options& o) {
  return finish_order(order(load(o.pres), o.max_cosets));
}

int check_enumerate(const Options& o) {
  Presentation p = load(o.pres);
  std::vector<Word> sub;
  for (const auto& s : o.subgroup) sub.push_back(parse_word(s));
  auto r = enumerate(p, sub, o.max_cosets);
  if (!r.completed()) {
    line("index", "indeterminate");
    line("limit", std::to_string(r.limit));
    return kIndeterminate;
  }
  line("index", std::to_string(r.index));
  line("cosets_used", std::to_string(r.cosets_used));
  line("permutation_check", yes_no(check_permutation_rep(p, sub, r.table)));
  return kOk;
}

// All freely reduced words of length 1..max_len in the given elements.
template <class Visit>
void reduced_words(const std::vector<Word>& gens, std::size_t max_len,
                   Visit visit) {
  struct Frame {
    Word value;
    std::size_t last;  // 2·i for gens[i], 2·i+1 for its inverse
  };
  std::vector<Frame> frontier{{Word{}, SIZE_MAX}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Frame> next;
    for (const auto& f : frontier) {
      for (std::size_t k = 0; k < 2 * gens.size(); ++k) {
        if (f.last != SIZE_MAX && (k ^ 1) == f.last) continue;
        const Word& g = gens[k / 2];
        Word v = f.value * (k % 2 ? invert(g) : g);
        visit(v);
        next.push_back({std::move(v), k});
      }
    }
    frontier = std::move(next);
  }
}

int check_free_subgroup(const Options& o) {
  if (o.gens.empty()) throw UsageError("--gens is required");
  Presentation base = load(o.pres);
  std::vector<Word> gens;
  for (const auto& g : o.gens) gens.push_back(parse_word(g));
  std::size_t words = 0;
  std::size_t trivial = 0;
  if (o.word.empty()) {
    if (!base.relators().empty()) {
      throw NotFreeBase("without --word the presentation must be free");
    }
    for (const auto& g : gens) {
      if (!base.alphabet().covers(g)) {
        throw UndeclaredGenerator(to_string(g) + " leaves the alphabet");
      }
    }
    reduced_words(gens, o.max_len, [&](const Word& w) {
      ++words;
      trivial += w.empty();
    });
    line("rank", std::to_string(SubgroupGraph::fold(gens).rank()));
  } else {
    auto wa = build_witness_amalgam(base, required_word(o));
    line("letters", wa.a.name() + " " + wa.b_left.name() + " " +
                        wa.b_right.name() + " " + wa.c.name());
    reduced_words(gens, o.max_len, [&](const Word& w) {
      ++words;
      trivial += is_trivial_word(wa.spec, w);
    });
  }
  line("max_len", std::to_string(o.max_len));
  line("words", std::to_string(words));
  line("trivial", std::to_string(trivial));
  line("free", yes_no(trivial == 0));
  return trivial == 0 ? kOk : kDomain;
}

int check_class_p(const Options& o) {
  Presentation p = load(o.pres);
  line("trace", to_string(p.effective_trace()));
  line("class_p", yes_no(verify_class_P(p.effective_trace())));
  return kOk;
}

int check_collect(const Options& o) {
  Word w = required_word(o);
  std::set<Generator> marked;
  for (const auto& m : o.marked) marked.insert(Generator(m));
  auto r = push_marked_right(w, marked);
  line("residual", to_string(r.residual));
  line("factors", std::to_string(r.factors.size()));
  line("reconstructs", yes_no(r.reconstruct() == w));
  for (const auto& f : r.factors) {
    std::cout << "factor: " << to_string(f.conjugator) << " " << f.letter.name()
              << " " << (f.sign > 0 ? "+1" : "-1") << "\n";
  }
  return kOk;
}

std::vector<std::string> split_commas(const std::vector<std::string>& in) {
  std::vector<std::string> out;
  for (const auto& s : in) {
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
      if (!item.empty()) out.push_back(item);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finitely presented group constructions and checks"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "construct a presentation");
  auto* check = app.add_subcommand("check", "inspect a presentation");
  build->require_subcommand(1);
  check->require_subcommand(1);

  using Handler = int (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto sub = [&](CLI::App* parent, const char* name, const char* help,
                 Handler h) {
    auto* s = parent->add_subcommand(name, help);
    s->add_option("--pres", o.pres, "presentation file");
    s->add_option("--word", o.word, "word over the presentation");
    s->add_option("--tm", o.tm, "Turing machine file");
    s->add_option("--input", o.input, "input index, written in binary");
    s->add_option("--max-cosets", o.max_cosets, "coset limit")
        ->capture_default_str();
    s->add_option("--max-len", o.max_len, "word length bound")
        ->capture_default_str();
    s->add_option("--max-steps", o.max_steps, "simulation step bound")
        ->capture_default_str();
    s->add_option("--out", o.out, "output presentation file");
    s->add_option("--seed", o.seed, "random seed")->capture_default_str();
    s->add_flag("--check-trivial", o.check_trivial,
                "enumerate the witness stage");
    s->add_option("--torsion", o.torsion, "append w^N to the witness");
    s->add_option("--attach", o.attach, "PATH:WORD:GENERATOR");
    s->add_option("--gens", o.gens, "comma separated words");
    s->add_option("--marked", o.marked, "comma separated generators");
    s->add_option("--subgroup", o.subgroup, "subgroup generator word");
    s->add_flag("--kill-h1", o.kill, "join witness groups to kill H1");
    s->add_flag("--uce", o.uce, "take the universal central extension");
    handlers.emplace_back(s, h);
  };
  sub(build, "witness", "witness group of a word", build_witness);
  sub(build, "kill-h1", "kill H1 by witness amalgams", build_kill_h1);
  sub(build, "join", "amalgamate groups along cyclic subgroups", build_join);
  sub(build, "uce", "universal central extension", build_uce);
  sub(build, "tm2group", "group of a Turing machine", build_tm2group);
  sub(build, "pipeline", "machine group, witness and extensions",
      build_pipeline);
  sub(check, "h1", "abelianization", check_h1);
  sub(check, "order", "group order by coset enumeration", check_order);
  sub(check, "enumerate", "subgroup index by coset enumeration",
      check_enumerate);
  sub(check, "free-subgroup", "bounded freeness of a set of words",
      check_free_subgroup);
  sub(check, "class-p", "audit the construction trace", check_class_p);
  sub(check, "collect", "move marked letters to the right", check_collect);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (o.torsion == 1) {
    std::cerr << "error: --torsion must be at least 2\n";
    return kUsage;
  }
  if (o.max_cosets == 0) {
    std::cerr << "error: --max-cosets must be at least 1\n";
    return kUsage;
  }
  o.gens = split_commas(o.gens);
  o.marked = split_commas(o.marked);
  try {
    for (const auto& [s, h] : handlers) {
      if (s->parsed()) return h(o);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
