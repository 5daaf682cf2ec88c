#include "sunflower/construction.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "sunflower/binom.hpp"

namespace sunflower {
namespace {

// Largest integer certainly <= x, when the interval pins one; x >= 0.
std::optional<BigInt> pin_floor(const Interval& x) {
  if (x.less(Interval::of(0L)) != Tern::False) return std::nullopt;
  BigInt hi = 1;
  int guard = 0;
  Tern t;
  while ((t = Interval::of(hi).less_equal(x)) == Tern::True) {
    hi <<= 1;
    if (++guard > 300) return std::nullopt;
  }
  if (t != Tern::False) return std::nullopt;
  BigInt lo = 0;
  while (hi - lo > 1) {
    const BigInt mid = (lo + hi) / 2;
    t = Interval::of(mid).less_equal(x);
    if (t == Tern::True)
      lo = mid;
    else if (t == Tern::False)
      hi = mid;
    else
      return std::nullopt;
  }
  if (x.less(Interval::of(BigInt(lo + 1))) != Tern::True) return std::nullopt;
  return lo;
}

void require_vector_shape(const BlockPartition& p, const CardinalityVector& v,
                          const char* who) {
  if (v.j < 1 || v.j > p.r() ||
      v.v.size() != static_cast<std::size_t>(p.r() - v.j + 1))
    throw std::invalid_argument(std::string(who) + ": vector shape mismatch");
  for (int e : v.v)
    if (e < 0 || e > p.q)
      throw std::invalid_argument(std::string(who) +
                                  ": vector entry outside [0, q]");
}

// prod_p C(q - v_p, u_p); zero when some u_p > q - v_p.
BigInt cramped_denominator(int q, const std::vector<int>& v,
                           const std::vector<int>& u) {
  BigInt denom(1);
  for (std::size_t p = 0; p < u.size(); ++p) denom *= binom(q - v[p], u[p]);
  return denom;
}

}  // namespace

BigRat ConstructionParams::b(long j) const {
  if (j < 1 || j > r)
    throw std::invalid_argument("ConstructionParams::b: j outside [1, r]");
  return b1 * pow_rat(make_rational(r - 1, r), 2 * (j - 1));
}

ConstructionParams ConstructionParams::direct(long q, long r, long beta,
                                              const BigRat& eps,
                                              const BigRat& b1) {
  if (q < 1 || r < 1 || beta < 0)
    throw std::invalid_argument(
        "ConstructionParams::direct: requires q >= 1, r >= 1, beta >= 0");
  ConstructionParams out;
  out.eps = eps;
  out.eps.canonicalize();
  if (!(out.eps > 0 && out.eps < 1))
    throw std::invalid_argument(
        "ConstructionParams::direct: eps outside (0, 1)");
  out.b1 = b1;
  out.b1.canonicalize();
  if (!(out.b1 > 0))
    throw std::invalid_argument("ConstructionParams::direct: b1 must be positive");
  out.q = q;
  out.r = r;
  out.beta = beta;
  return out;
}

PaperConstants paper_constants(const BigRat& eps, long m, long prec) {
  BigRat e = eps;
  e.canonicalize();
  if (!(e > 0 && e < 1))
    throw std::invalid_argument("paper_constants: eps outside (0, 1)");
  if (m < 1) throw std::invalid_argument("paper_constants: m must be positive");
  PaperConstants out;
  out.q = floor_sqrt(floor_sqrt(pow_int(BigInt(m), 3), BigInt(1)), BigInt(1))
              .get_si();
  out.r = m / out.q;
  // c_1 has the largest exponent 2^(3/eps); cap it well inside MPFR's
  // exponent range before evaluating anything.
  out.finite = make_rational(3, 1) / e <= 60;
  if (!out.finite) return out;

  const Interval ln2 = Interval::of(2L, prec).log();
  auto c_of = [&](long i) {
    const Interval inner = Interval::of(make_rational(4 - i, 1) / e, prec);
    return ((inner * ln2).exp() * ln2).exp();
  };
  out.c1 = c_of(1);
  out.c2 = c_of(2);
  out.c3 = c_of(3);
  const Interval m4 =
      (Interval::of(m, prec).log() * Interval::of(make_rational(1, 4), prec))
          .exp();
  out.alpha = m4 / out.c1;
  out.b1 = Interval::of(m, prec) / (out.c2 * out.alpha);
  out.beta = pin_floor(out.c3 * m4);
  return out;
}

ElementSet BlockPartition::support() const {
  ElementSet u;
  for (const ElementSet& b : blocks) u = u | b;
  return u;
}

BlockPartition make_block_partition(const Universe& u, int q,
                                    std::vector<ElementSet> blocks) {
  if (q < 1)
    throw std::invalid_argument("make_block_partition: q must be positive");
  if (blocks.empty())
    throw std::invalid_argument("make_block_partition: no blocks");
  ElementSet seen;
  for (const ElementSet& b : blocks) {
    if (b.empty())
      throw std::invalid_argument("make_block_partition: empty block");
    if (!u.contains_set(b))
      throw std::invalid_argument(
          "make_block_partition: block outside the universe");
    if (seen.intersects(b))
      throw std::invalid_argument("make_block_partition: blocks overlap");
    seen = seen | b;
  }
  return BlockPartition{q, std::move(blocks)};
}

void require_block_assumption(const BlockPartition& p, const SetFamily& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (int j = 0; j < p.r(); ++j) {
      const int c = f.set(i).intersection_count(p.blocks[j]);
      if (c != p.q)
        throw std::invalid_argument(
            "block assumption violated: member " + f.set(i).str() +
            " meets block " + p.blocks[j].str() + " in " + std::to_string(c) +
            " elements, expected " + std::to_string(p.q));
    }
}

int CardinalityVector::norm() const {
  int s = 0;
  for (int e : v) s += e;
  return s;
}

std::vector<CardinalityVector> enumerate_vectors(int j, int q, int r,
                                                 VectorFilter filter,
                                                 int beta) {
  if (j < 1 || j > r)
    throw std::invalid_argument("enumerate_vectors: j outside [1, r]");
  if (q < 0) throw std::invalid_argument("enumerate_vectors: negative q");
  const int len = r - j + 1;
  std::vector<int> v(len, 0);
  std::vector<CardinalityVector> out;
  std::vector<BigInt> per_norm(static_cast<std::size_t>(len) * q + 1,
                               BigInt(0));
  for (;;) {
    int w = 0;
    for (int e : v) w += e;
    ++per_norm[w];
    bool keep = true;
    switch (filter) {
      case VectorFilter::All:
        break;
      case VectorFilter::Beta:
        keep = w > beta;
        break;
      case VectorFilter::ZeroTail:
        for (int pos = 1; pos < len && keep; ++pos) keep = v[pos] == 0;
        break;
    }
    if (keep) out.push_back(CardinalityVector{j, v});
    int pos = len - 1;
    while (pos >= 0 && v[pos] == q) v[pos--] = 0;
    if (pos < 0) break;
    ++v[pos];
  }
  // Choose-with-repetition: exactly C(w + len - 1, len - 1) vectors of norm
  // w when no entry can clip at q, never more.
  for (std::size_t w = 0; w < per_norm.size(); ++w) {
    const BigInt& cap = binom(static_cast<long>(w) + len - 1, len - 1);
    if (per_norm[w] > cap ||
        (q >= static_cast<long>(w) && per_norm[w] != cap))
      throw std::logic_error(
          "enumerate_vectors: repetition-count cross-check failed");
  }
  return out;
}

std::vector<ElementSet> sets_with_vector(const BlockPartition& p,
                                         const CardinalityVector& v,
                                         const ElementSet& b) {
  require_vector_shape(p, v, "sets_with_vector");
  std::vector<ElementSet> out;
  std::function<void(std::size_t, ElementSet)> rec = [&](std::size_t idx,
                                                         ElementSet acc) {
    if (idx == v.v.size()) {
      out.push_back(acc);
      return;
    }
    const ElementSet ground = p.blocks[v.j - 1 + idx] - b;
    for_each_subset(ground, v.v[idx], [&](const ElementSet& pick) {
      rec(idx + 1, acc | pick);
    });
  };
  rec(0, ElementSet());
  return out;
}

BigRat pi_condition_ii_value(const SetFamily& f_i, const BlockPartition& p,
                             int j, const ConstructionParams& params) {
  if (f_i.size() == 0)
    throw std::invalid_argument("pi_condition_ii_value: empty family");
  if (p.q != params.q || p.r() != params.r)
    throw std::invalid_argument(
        "pi_condition_ii_value: partition and params disagree on (q, r)");
  if (j < 1 || j > p.r())
    throw std::invalid_argument("pi_condition_ii_value: j outside [1, r]");
  const BigRat bj = params.b(j);
  BigRat sum(0);
  for (const CardinalityVector& v : enumerate_vectors(
           j, p.q, p.r(), VectorFilter::Beta, static_cast<int>(params.beta))) {
    BigInt denom(1);
    for (int e : v.v) denom *= binom(p.q, e);
    BigRat mass(0);
    for (const ElementSet& s : sets_with_vector(p, v, ElementSet())) {
      const BigRat rs = restricted_size(f_i, s);
      if (rs != 0) mass += rs * rs;
    }
    if (mass != 0) sum += mass * pow_rat(bj, v.norm()) / BigRat(denom);
  }
  const BigRat total = family_size(f_i);
  return sum / (total * total);
}

VerdictReport pi_check(const SetFamily& f1, const SetFamily& f2,
                       const SetFamily& f3, const BlockPartition& p, int j,
                       const ConstructionParams& params, const BigInt& fsize) {
  const SetFamily* fams[3] = {&f1, &f2, &f3};
  for (const SetFamily* f : fams) {
    if (f->m() != f1.m() || !(f->universe() == f1.universe()))
      throw std::invalid_argument(
          "pi_check: families disagree on universe or member size");
    require_block_assumption(p, *f);
  }
  if (!f1.universe().contains_set(p.support()))
    throw std::invalid_argument("pi_check: partition outside the universe");
  if (p.q != params.q || p.r() != params.r)
    throw std::invalid_argument(
        "pi_check: partition and params disagree on (q, r)");
  if (j < 1 || j > p.r() + 1)
    throw std::invalid_argument("pi_check: j outside [1, r + 1]");
  StopWatch watch;

  VerdictReport report;
  report.claim_id = "property-pi";
  std::string note;
  bool ok = true;

  // i) each family carries more than Fsize eps^{jq} mass.
  const BigRat threshold =
      BigRat(fsize) * pow_rat(params.eps, static_cast<long>(j) * params.q);
  for (int i = 0; i < 3 && ok; ++i) {
    if (!(family_size(*fams[i]) > threshold)) {
      ok = false;
      report.witness.text = "condition i fails for family " +
                            std::to_string(i + 1) + ": ||F_i|| = " +
                            rational_string(family_size(*fams[i]));
    }
  }
  note += "i: threshold " + rational_string(threshold);

  // ii) the mass ratio stays below 1; final level r + 1 has no condition.
  if (j <= p.r()) {
    note += "; ii:";
    for (int i = 0; i < 3; ++i) {
      if (fams[i]->size() == 0) {
        note += " (empty)";
        continue;
      }
      const BigRat ratio = pi_condition_ii_value(*fams[i], p, j, params);
      note += " " + rational_string(ratio);
      if (ok && !(ratio < 1)) {
        ok = false;
        report.witness.text = "condition ii fails for family " +
                              std::to_string(i + 1) + ": ratio " +
                              rational_string(ratio);
      }
    }
  } else {
    note += "; ii: final level, no condition";
  }

  // iii) distinct families never meet inside Z_1 u ... u Z_{j-1}.
  ElementSet zunion;
  for (int z = 0; z < j - 1 && z < p.r(); ++z) zunion = zunion | p.blocks[z];
  for (int a = 0; a < 3 && ok; ++a)
    for (int b = a + 1; b < 3 && ok; ++b)
      for (std::size_t ia = 0; ia < fams[a]->size() && ok; ++ia)
        for (std::size_t ib = 0; ib < fams[b]->size() && ok; ++ib) {
          const ElementSet meet =
              fams[a]->set(ia) & fams[b]->set(ib) & zunion;
          if (!meet.empty()) {
            ok = false;
            report.witness.text =
                "condition iii fails: families " + std::to_string(a + 1) +
                " and " + std::to_string(b + 1) + " share " + meet.str();
            report.witness.elements = meet.elements();
          }
        }
  note += "; iii over " + zunion.str();

  report.holds = ok ? Verdict::Holds : Verdict::Fails;
  report.lhs = ReportValue::of_text("families of sizes " +
                                    std::to_string(f1.size()) + ", " +
                                    std::to_string(f2.size()) + ", " +
                                    std::to_string(f3.size()));
  report.rhs = ReportValue::of_text("level " + std::to_string(j) +
                                    " nesting conditions");
  report.note = std::move(note);
  report.runtime_ms = watch.ms();
  return report;
}

std::array<VerdictReport, 3> step1_conditions_check(
    const SetFamily& f_i, const BlockPartition& p, int j, const ElementSet& s,
    const CardinalityVector& v, const BigRat& b_in, int beta) {
  BigRat b = b_in;
  b.canonicalize();
  if (!(b > 0))
    throw std::invalid_argument("step1_conditions_check: b must be positive");
  if (j < 1 || j > p.r())
    throw std::invalid_argument("step1_conditions_check: j outside [1, r]");
  if (v.j != j)
    throw std::invalid_argument(
        "step1_conditions_check: vector start differs from j");
  require_vector_shape(p, v, "step1_conditions_check");
  ElementSet allowed;
  for (int z = j - 1; z < p.r(); ++z) allowed = allowed | p.blocks[z];
  if (!s.subset_of(allowed))
    throw std::invalid_argument(
        "step1_conditions_check: S leaves blocks Z_j..Z_r");
  for (std::size_t idx = 0; idx < v.v.size(); ++idx)
    if (s.intersection_count(p.blocks[j - 1 + idx]) != v.v[idx])
      throw std::invalid_argument(
          "step1_conditions_check: S does not realize the vector");
  StopWatch watch;

  const BigRat base = restricted_size(f_i, s);
  const BigRat base_sq = base * base;

  // Shared evaluation of sum over u of ||F_i[S u T]||^2 scale^{|u|} /
  // prod C(q - v_p, u_p). A vanishing denominator must carry zero mass.
  auto tail_sum = [&](const std::vector<CardinalityVector>& us,
                      const BigRat& scale) {
    BigRat sum(0);
    for (const CardinalityVector& u : us) {
      if (u.norm() == 0) continue;
      BigRat mass(0);
      for (const ElementSet& t : sets_with_vector(p, u, s)) {
        const BigRat rs = restricted_size(f_i, s | t);
        if (rs != 0) mass += rs * rs;
      }
      const BigInt denom = cramped_denominator(p.q, v.v, u.v);
      if (denom == 0) {
        if (mass != 0)
          throw std::invalid_argument(
              "step1_conditions_check: vanishing denominator carries mass; "
              "the per-block assumption fails for this family");
        continue;
      }
      if (mass != 0) sum += mass * pow_rat(scale, u.norm()) / BigRat(denom);
    }
    return sum;
  };

  const BigRat sum1 = tail_sum(
      enumerate_vectors(j, p.q, p.r(), VectorFilter::Beta, beta), b);
  const BigRat sum2 = tail_sum(
      enumerate_vectors(j, p.q, p.r(), VectorFilter::ZeroTail), b / 8);

  std::array<VerdictReport, 3> out;
  out[0].claim_id = "step1-1";
  out[0].lhs = ReportValue::of(sum1);
  out[0].rhs = ReportValue::of(base_sq);
  out[0].holds = sum1 <= base_sq ? Verdict::Holds : Verdict::Fails;
  out[0].note = "heavy tails against ||F_i[S]||^2 at b";

  out[1].claim_id = "step1-2";
  out[1].lhs = ReportValue::of(sum2);
  out[1].rhs = ReportValue::of(base_sq);
  out[1].holds = sum2 <= base_sq ? Verdict::Holds : Verdict::Fails;
  out[1].note = "zero-tail extensions against ||F_i[S]||^2 at b/8";

  const BigRat floor3 = family_size(f_i) * pow_rat(b, -v.norm()) / 3;
  out[2].claim_id = "step1-3";
  out[2].lhs = ReportValue::of(base);
  out[2].rhs = ReportValue::of(floor3);
  out[2].holds = base >= floor3 ? Verdict::Holds : Verdict::Fails;
  out[2].note = "restricted mass keeps a third of ||F_i|| b^{-|v|}";

  for (VerdictReport& r : out) r.runtime_ms = watch.ms();
  return out;
}

ToyWitnessResult toy_witness_search(const SetFamily& f,
                                    const BlockPartition& p,
                                    const ConstructionParams& params, int j,
                                    long budget) {
  if (f.size() == 0)
    throw std::invalid_argument("toy_witness_search: empty family");
  if (p.q != params.q || p.r() != params.r)
    throw std::invalid_argument(
        "toy_witness_search: partition and params disagree on (q, r)");
  if (j < 1 || j > p.r())
    throw std::invalid_argument("toy_witness_search: j outside [1, r]");
  if (params.r < 2)
    throw std::invalid_argument(
        "toy_witness_search: requires r >= 2 for a positive step threshold");
  if (budget < 1)
    throw std::invalid_argument("toy_witness_search: budget must be positive");

  const BigRat b = params.b(j) * make_rational(params.r - 1, params.r);
  const BigRat total = family_size(f);
  const BigRat total_sq = total * total;
  const int len = p.r() - j + 1;

  // Zero-tail vectors are scalar; scanning v_j downward makes the first
  // entry-inequality hit the maximal one. v = 0 always passes with equality.
  CardinalityVector chosen{j, std::vector<int>(len, 0)};
  BigRat entry(0);
  for (int vj = p.q; vj >= 0; --vj) {
    CardinalityVector v{j, std::vector<int>(len, 0)};
    v.v[0] = vj;
    BigRat mass(0);
    for (const ElementSet& s : sets_with_vector(p, v, ElementSet())) {
      const BigRat rs = restricted_size(f, s);
      if (rs != 0) mass += rs * rs;
    }
    const BigRat value =
        mass * pow_rat(b, vj) / BigRat(binom(p.q, vj));
    if (value >= total_sq) {
      chosen = v;
      entry = value;
      break;
    }
  }

  ToyWitnessResult out;
  long evaluated = 0;
  for (const ElementSet& s : sets_with_vector(p, chosen, ElementSet())) {
    if (++evaluated > budget) {
      out.status = SearchStatus::BudgetExceeded;
      return out;
    }
    std::array<VerdictReport, 3> conds = step1_conditions_check(
        f, p, j, s, chosen, b, static_cast<int>(params.beta));
    if (conds[0].holds == Verdict::Holds &&
        conds[1].holds == Verdict::Holds &&
        conds[2].holds == Verdict::Holds) {
      out.status = SearchStatus::Found;
      out.witness = ToyWitness{chosen, entry / total_sq, s, std::move(conds)};
      return out;
    }
  }
  return out;
}

}  // namespace sunflower
