#include "fpg/trace.hpp"

#include "fpg/errors.hpp"

#include <cctype>

namespace fpg {

Trace TraceNode::free_base() {
  return std::make_shared<TraceNode>(
      TraceNode{TraceKind::FreeBase, SubgroupKind::Free, {}});
}

Trace TraceNode::input() {
  return std::make_shared<TraceNode>(
      TraceNode{TraceKind::DiscreteSubgroupInput, SubgroupKind::Free, {}});
}

Trace TraceNode::amalgam(SubgroupKind kind, Trace left, Trace right) {
  return std::make_shared<TraceNode>(TraceNode{
      TraceKind::Amalgam, kind, {std::move(left), std::move(right)}});
}

Trace TraceNode::hnn(SubgroupKind kind, Trace base) {
  return std::make_shared<TraceNode>(
      TraceNode{TraceKind::HNN, kind, {std::move(base)}});
}

Trace TraceNode::central_extension(Trace base) {
  return std::make_shared<TraceNode>(TraceNode{
      TraceKind::CentralExtension, SubgroupKind::Free, {std::move(base)}});
}

Trace TraceNode::quotient(Trace base) {
  return std::make_shared<TraceNode>(
      TraceNode{TraceKind::Quotient, SubgroupKind::Other, {std::move(base)}});
}

bool traces_equal(const Trace& a, const Trace& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

bool operator==(const TraceNode& a, const TraceNode& b) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  if ((a.kind == TraceKind::Amalgam || a.kind == TraceKind::HNN) &&
      a.subgroup != b.subgroup) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!traces_equal(a.children[i], b.children[i])) return false;
  }
  return true;
}

namespace {

const char* kind_name(SubgroupKind k) {
  switch (k) {
    case SubgroupKind::Free: return "free";
    case SubgroupKind::Abelian: return "abelian";
    case SubgroupKind::Cyclic: return "cyclic";
    case SubgroupKind::Other: return "other";
  }
  return "other";
}

class TraceReader {
 public:
  explicit TraceReader(std::string_view text) : text_(text) {}

  Trace read() {
    skip();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      std::string head = atom();
      Trace out;
      if (head == "amalgam") {
        SubgroupKind k = subgroup_kind(atom());
        Trace left = read();
        Trace right = read();
        out = TraceNode::amalgam(k, left, right);
      } else if (head == "hnn") {
        SubgroupKind k = subgroup_kind(atom());
        out = TraceNode::hnn(k, read());
      } else if (head == "uce") {
        out = TraceNode::central_extension(read());
      } else if (head == "quotient") {
        out = TraceNode::quotient(read());
      } else {
        fail("unknown trace step '" + head + "'");
      }
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return out;
    }
    std::string leaf = atom();
    if (leaf == "free") return TraceNode::free_base();
    if (leaf == "input") return TraceNode::input();
    fail("unknown trace leaf '" + leaf + "'");
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) fail("trailing input after trace");
  }

 private:
  void skip() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string atom() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected trace keyword");
    return std::string(text_.substr(start, pos_ - start));
  }

  SubgroupKind subgroup_kind(const std::string& s) {
    if (s == "free") return SubgroupKind::Free;
    if (s == "abelian") return SubgroupKind::Abelian;
    if (s == "cyclic") return SubgroupKind::Cyclic;
    if (s == "other") return SubgroupKind::Other;
    fail("unknown subgroup kind '" + s + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("trace: " + what, 1, pos_ + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Trace& trace) {
  if (!trace) return "none";
  switch (trace->kind) {
    case TraceKind::FreeBase: return "free";
    case TraceKind::DiscreteSubgroupInput: return "input";
    case TraceKind::Amalgam:
      return std::string("(amalgam ") + kind_name(trace->subgroup) + " " +
             to_string(trace->children.at(0)) + " " +
             to_string(trace->children.at(1)) + ")";
    case TraceKind::HNN:
      return std::string("(hnn ") + kind_name(trace->subgroup) + " " +
             to_string(trace->children.at(0)) + ")";
    case TraceKind::CentralExtension:
      return "(uce " + to_string(trace->children.at(0)) + ")";
    case TraceKind::Quotient:
      return "(quotient " + to_string(trace->children.at(0)) + ")";
  }
  return "none";
}

Trace parse_trace(std::string_view text) {
  TraceReader reader(text);
  Trace out = reader.read();
  reader.finish();
  return out;
}

}  // namespace fpg
