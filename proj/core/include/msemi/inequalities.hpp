#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "msemi/law_context.hpp"
#include "msemi/rearrangement.hpp"
#include "msemi/report.hpp"

namespace msemi {

/// (k; n_1..n_k; t_1..t_k; s) for the Hoffmann-Jorgensen bound.
struct HJParameters {
  std::vector<unsigned> n;
  std::vector<Real> t;
  Real s;

  std::size_t k() const { return n.size(); }
  unsigned total() const;
  /// Throws DomainError unless k >= 1, n_i >= 1, t_i, s >= 0 and sum n_i <= length + 1.
  void validate(std::size_t length) const;
  /// (2 n_1 - 1) t_1 + 2 sum_{i>=2} n_i t_i + (sum n_i - 1) s.
  Real threshold() const;
  nlohmann::json to_json() const;
};

/// 0-based indices i with P(U <= t_i)^{n_i - [i = 0]} <= 1/n_i!.
std::vector<std::size_t> hj_index_set(const HJParameters& params, const std::vector<Real>& cdf_at_t);

InequalityReport check_hj(const LawContext& ctx, const HJParameters& params);

/// P(U > (3K-1)t) <= (1/K!) (P(U > t)/P(U <= t))^K + P(M > t), for t > 0.
InequalityReport check_hj_simple(const LawContext& ctx, unsigned K, const Real& t);

/// Minimal and maximal forms over m <= k <= n (1-based m).
std::pair<InequalityReport, InequalityReport> check_mogulskii(const LawContext& ctx, std::size_t m, const Real& a,
                                                              const Real& b);

/// l(2t) <= l(t/(1-t)) <= M*(t) <= l(t) for t in (0, 1); the report carries the tightest link.
InequalityReport check_ell_sandwich(const LawContext& ctx, const Real& t, double tol = kFloatTolerance);

/// (t l(t)^p + Psi(t))/(1+t) <= E[M^p] <= l(t)^p + Psi(t).
InequalityReport check_moment_sandwich(const LawContext& ctx, const Real& t, double p,
                                       double tol = kFloatTolerance);

/// Required c_1 = U*(t) max(log(1/s), log log(4/t)) / (log(1/t) (U*(s) + M*(t/2))).
RatioReport check_quantile_lemma(const LawContext& ctx, const Real& t, const Real& s);

/// The laws used by the monoid-based checks: the sequence on its monoid
/// completion with both basepoints at the identity.
LawContext monoid_context(const LawContext& ctx);

/// Sequence of truncations X_i(t) (upper = false) or X'_i(t) (upper = true).
IndependentSequence truncated_sequence(const IndependentSequence& monoid_seq, const Real& t, bool upper);

/// Two approximation ratios of E[U^p]^{1/p}; 1 by convention (degenerate) when U = 0.
std::pair<RatioReport, RatioReport> check_tbounds(const LawContext& ctx, double p);

/// U'(e^{-p}/8)*(eta) <= U*(eta - e^{-p}/8) for eta in [e^{-p}/8, 1].
InequalityReport check_truncated_quantile(const LawContext& ctx, double p, const Real& eta);

/// E[U^p] <= 2^{1+2p} (E[M^p] + U*(2^{-1-2p})^p).
InequalityReport check_hj_moment_claim(const LawContext& ctx, double p, double tol = kFloatTolerance);

/// E[U''(r)^p]^{1/p} <= 2 e^{2^p r/p} E[l^p]^{1/p}, r in (0, 1).
InequalityReport check_truncated_moment(const LawContext& ctx, double r, double p, double tol = kFloatTolerance);

struct TupqParameters {
  double p0 = 1;
  double p = 1;
  double q = 1;
  double eps = 0;  // defaults to log 16 via tupq_defaults()

  /// Throws DomainError unless q >= p >= p0 > 0 and eps in (-q, log 16].
  void validate() const;
  /// eps >= min(1, e - p0): the second inequality applies.
  bool second_form_applies() const;
  /// q / max(p, log(eps + q)).
  double factor() const;
  nlohmann::json to_json() const;
};

TupqParameters tupq_defaults(double p, double q, double p0 = 1);
double log16();

/// c'(p0) = c (8^{1/p0} e + max(1, log(eps + p0)/p0)).
double c_prime(double c, double p0, double eps);

/// Smallest c for which the first inequality holds on this sequence.
RatioReport required_c(const LawContext& ctx, const TupqParameters& params);

/// Both forms; the second only when eps >= min(1, e - p0).
std::pair<InequalityReport, std::optional<InequalityReport>> check_tupq(const LawContext& ctx,
                                                                        const TupqParameters& params, double c,
                                                                        double c_prime_value,
                                                                        double tol = kFloatTolerance);

/// Transfer of tail domination to rearrangements. When the hypothesis fails on
/// the grid the report is flagged degenerate and its conclusion untested.
InequalityReport check_rearrangement_transfer(const std::vector<TransferTuple>& tuples, const ScalarLaw& law_x,
                                              const ScalarLaw& law_y, const Real& t);

}  // namespace msemi
