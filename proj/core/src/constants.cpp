#include "msemi/constants.hpp"

#include <limits>

#include "msemi/json_io.hpp"
#include "msemi/parallel.hpp"

namespace msemi {

namespace {

ConstantEstimate blank(std::string name, std::size_t size, std::uint64_t seed) {
  ConstantEstimate e;
  e.constant = std::move(name);
  e.corpus_size = size;
  e.seed = seed;
  return e;
}

bool abelian(const IndependentSequence& s) { return s.instance().capabilities().abelian; }

template <typename Fn>
auto per_sequence(const std::vector<IndependentSequence>& corpus, Fn&& fn) {
  using Out = decltype(fn(corpus.front(), std::size_t{0}));
  std::vector<Out> out(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) { out[i] = fn(corpus[i], i); });
  return out;
}

}  // namespace

std::vector<std::pair<Real, Real>> default_c1_grid() {
  std::vector<Real> ts{Real::ratio(1, 100), Real::ratio(1, 20), Real::ratio(1, 10)};
  std::vector<Real> ss{Real::ratio(1, 100), Real::ratio(1, 20), Real::ratio(1, 10), Real::ratio(1, 4),
                       Real::ratio(1, 2)};
  std::vector<std::pair<Real, Real>> grid;
  for (const auto& t : ts) {
    for (const auto& s : ss) {
      if (t <= s) grid.emplace_back(t, s);
    }
  }
  return grid;
}

ConstantEstimate estimate_c1(const std::vector<IndependentSequence>& corpus,
                             const std::vector<std::pair<Real, Real>>& grid, std::uint64_t seed) {
  auto est = blank("c1", corpus.size(), seed);
  nlohmann::json g = nlohmann::json::array();
  for (const auto& [t, s] : grid) g.push_back({json_real(t), json_real(s)});
  est.params = {{"grid", g}};
  auto results = per_sequence(corpus, [&](const IndependentSequence& seq, std::size_t) {
    LawContext ctx(seq);
    std::vector<RatioReport> out;
    for (const auto& [t, s] : grid) out.push_back(check_quantile_lemma(ctx, t, s));
    return out;
  });
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    nlohmann::json sj;
    for (const auto& r : results[i]) {
      if (!r.degenerate && (!est.witness || r.ratio > est.value)) sj = sequence_to_json(corpus[i]);
      est.absorb(r, i, corpus[i].instance().name(), sj);
    }
  }
  return est;
}

std::vector<PQ> default_pq_grid() { return {{1, 1}, {1, 2}, {2, 4}, {1, 8}}; }

nlohmann::json CEstimate::to_json() const {
  nlohmann::json j = c.to_json();
  j["c_prime"] = json_number(c_prime);
  j["second_checked"] = second_checked;
  j["second_violations"] = second_violations;
  if (worst_second) j["worst_second"] = worst_second->to_json();
  return j;
}

CEstimate estimate_c(const std::vector<IndependentSequence>& corpus, double p0, double eps,
                     const std::vector<PQ>& grid, std::uint64_t seed) {
  CEstimate out;
  out.c = blank("c", corpus.size(), seed);
  nlohmann::json g = nlohmann::json::array();
  for (const auto& pq : grid) g.push_back({pq.p, pq.q});
  out.c.params = {{"p0", p0}, {"eps", eps}, {"pq", g}, {"scope", "abelian instances"}};

  std::vector<TupqParameters> params;
  for (const auto& pq : grid) {
    TupqParameters prm{p0, pq.p, pq.q, eps};
    prm.validate();
    params.push_back(prm);
  }
  std::vector<std::optional<LawContext>> contexts(corpus.size());
  auto results = per_sequence(corpus, [&](const IndependentSequence& seq, std::size_t i) {
    std::vector<RatioReport> r;
    if (!abelian(seq)) return r;
    contexts[i].emplace(seq);
    for (const auto& prm : params) r.push_back(required_c(*contexts[i], prm));
    return r;
  });
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (const auto& r : results[i]) {
      nlohmann::json sj;
      if (!r.degenerate && (!out.c.witness || r.ratio > out.c.value)) sj = sequence_to_json(corpus[i]);
      out.c.absorb(r, i, corpus[i].instance().name(), sj);
    }
  }
  out.c_prime = c_prime(out.c.value, p0, eps);
  if (!params.empty() && !params.front().second_form_applies()) return out;
  auto seconds = per_sequence(corpus, [&](const IndependentSequence&, std::size_t i) {
    std::vector<InequalityReport> r;
    if (!contexts[i]) return r;
    for (const auto& prm : params) {
      auto [first, second] = check_tupq(*contexts[i], prm, out.c.value, out.c_prime);
      if (second) r.push_back(std::move(*second));
    }
    return r;
  });
  for (auto& rs : seconds) {
    for (auto& r : rs) {
      ++out.second_checked;
      if (!r.passes()) ++out.second_violations;
      if (!out.worst_second || r.slack < out.worst_second->slack) out.worst_second = r;
    }
  }
  return out;
}

std::vector<ConstantEstimate> estimate_tbounds(const std::vector<IndependentSequence>& corpus,
                                               const std::vector<double>& ps, std::uint64_t seed) {
  std::vector<ConstantEstimate> est{blank("tbounds_ratio1_upper", corpus.size(), seed),
                                    blank("tbounds_ratio1_lower", corpus.size(), seed),
                                    blank("tbounds_ratio2_upper", corpus.size(), seed),
                                    blank("tbounds_ratio2_lower", corpus.size(), seed)};
  for (auto& e : est) e.params = {{"p", ps}, {"scope", "abelian instances"}};
  auto results = per_sequence(corpus, [&](const IndependentSequence& seq, std::size_t) {
    std::vector<std::pair<RatioReport, RatioReport>> r;
    if (!abelian(seq)) return r;
    LawContext ctx(seq);
    for (double p : ps) r.push_back(check_tbounds(ctx, p));
    return r;
  });
  auto inverted = [](RatioReport r) {
    if (!r.degenerate) r.ratio = r.ratio > 0 ? 1 / r.ratio : std::numeric_limits<double>::infinity();
    return r;
  };
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (const auto& [r1, r2] : results[i]) {
      const RatioReport cand[4] = {r1, inverted(r1), r2, inverted(r2)};
      for (int k = 0; k < 4; ++k) {
        nlohmann::json sj;
        if (!cand[k].degenerate && (!est[k].witness || cand[k].ratio > est[k].value)) {
          sj = sequence_to_json(corpus[i]);
        }
        est[k].absorb(cand[k], i, corpus[i].instance().name(), sj);
      }
    }
  }
  return est;
}

}  // namespace msemi
