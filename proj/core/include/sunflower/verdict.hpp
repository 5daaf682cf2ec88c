#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "sunflower/bigmath.hpp"
#include "sunflower/interval.hpp"

namespace sunflower {

// Outcome of a checked claim.
//
//   Holds        - the claim was verified.
//   Fails        - a concrete violation was found (see witness).
//   Vacuous      - the claim's hypothesis is not met by the input, so the
//                  implication is true but carries no content. Used both for
//                  degenerate inputs (e.g. a nonpositive bound) and for
//                  lemma preconditions the input fails to satisfy; the note
//                  says which.
//   Inconclusive - interval arithmetic at the working precision could not
//                  separate the two sides. Retry at higher precision.
//
// Malformed inputs (out-of-range sizes, inconsistent dimensions) are not
// verdicts; they throw std::invalid_argument.
enum class Verdict { Holds, Fails, Vacuous, Inconclusive };

const char* verdict_name(Verdict v);

// Tern -> Verdict for a claim with no vacuous case.
Verdict verdict_of(Tern t);

// A reported side of a claim: an exact rational, an interval (as decimal
// endpoint strings, outward-rounded), infinity, or free text.
struct ReportValue {
  enum class Kind { None, Exact, Interval, Infinite, Text };
  Kind kind = Kind::None;
  BigRat exact;
  std::string lo, hi;
  std::string text;

  static ReportValue none();
  static ReportValue of(const BigRat& v);
  static ReportValue of(const BigInt& v);
  static ReportValue of(const Interval& v);
  static ReportValue infinite();
  static ReportValue of_text(std::string t);
  std::string str() const;
};

// Counterexample or certificate data attached to a report.
struct ReportWitness {
  std::vector<int> elements;          // an element set, ascending
  std::vector<std::size_t> indices;   // member indices into the family
  std::string text;
  bool empty() const { return elements.empty() && indices.empty() && text.empty(); }
};

// Wall clock for VerdictReport::runtime_ms.
class StopWatch {
 public:
  StopWatch() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct VerdictReport {
  std::string claim_id;
  Verdict holds = Verdict::Inconclusive;
  ReportValue lhs, rhs;
  ReportWitness witness;
  std::string note;
  long long runtime_ms = 0;

  bool passed() const {
    return holds == Verdict::Holds || holds == Verdict::Vacuous;
  }
  std::string to_text() const;
};

}  // namespace sunflower
