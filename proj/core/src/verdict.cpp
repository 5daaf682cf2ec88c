#include "sunflower/verdict.hpp"

#include <sstream>

namespace sunflower {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Vacuous: return "vacuous";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Verdict verdict_of(Tern t) {
  switch (t) {
    case Tern::True: return Verdict::Holds;
    case Tern::False: return Verdict::Fails;
    case Tern::Unknown: return Verdict::Inconclusive;
  }
  return Verdict::Inconclusive;
}

ReportValue ReportValue::none() { return {}; }

ReportValue ReportValue::of(const BigRat& v) {
  ReportValue r;
  r.kind = Kind::Exact;
  r.exact = v;
  return r;
}

ReportValue ReportValue::of(const BigInt& v) { return of(BigRat(v)); }

ReportValue ReportValue::of(const Interval& v) {
  ReportValue r;
  r.kind = Kind::Interval;
  r.lo = v.lo_string();
  r.hi = v.hi_string();
  return r;
}

ReportValue ReportValue::infinite() {
  ReportValue r;
  r.kind = Kind::Infinite;
  r.text = "inf";
  return r;
}

ReportValue ReportValue::of_text(std::string t) {
  ReportValue r;
  r.kind = Kind::Text;
  r.text = std::move(t);
  return r;
}

std::string ReportValue::str() const {
  switch (kind) {
    case Kind::None: return "";
    case Kind::Exact: return rational_string(exact);
    case Kind::Interval: return "[" + lo + ", " + hi + "]";
    case Kind::Infinite: return "inf";
    case Kind::Text: return text;
  }
  return "";
}

std::string VerdictReport::to_text() const {
  std::ostringstream os;
  os << claim_id << ": " << verdict_name(holds);
  if (lhs.kind != ReportValue::Kind::None) os << "  lhs=" << lhs.str();
  if (rhs.kind != ReportValue::Kind::None) os << "  rhs=" << rhs.str();
  if (!witness.empty()) {
    os << "  witness=";
    if (!witness.elements.empty()) {
      os << "{";
      for (std::size_t i = 0; i < witness.elements.size(); ++i)
        os << (i ? " " : "") << witness.elements[i];
      os << "}";
    }
    if (!witness.indices.empty()) {
      os << "#[";
      for (std::size_t i = 0; i < witness.indices.size(); ++i)
        os << (i ? " " : "") << witness.indices[i];
      os << "]";
    }
    if (!witness.text.empty()) os << witness.text;
  }
  if (!note.empty()) os << "  (" << note << ")";
  return os.str();
}

}  // namespace sunflower
