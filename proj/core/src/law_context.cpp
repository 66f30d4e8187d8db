#include "msemi/law_context.hpp"

namespace msemi {

LawContext::LawContext(IndependentSequence seq, EngineSpec engine) : seq_(std::move(seq)), engine_(engine) {
  std::vector<PathFunctional> fns{functional::u_n, functional::m_n};
  if (engine_.kind == EngineKind::monte_carlo) {
    for (std::size_t j = 0; j < seq_.size(); ++j) fns.push_back(functional::y(j));
  }
  laws_ = functional_laws(seq_, fns, engine_);
  if (engine_.kind == EngineKind::monte_carlo) {
    magnitudes_.assign(laws_.begin() + 2, laws_.end());
    laws_.resize(2);
  } else {
    for (std::size_t j = 0; j < seq_.size(); ++j) {
      magnitudes_.push_back(magnitude_law(seq_.instance(), seq_.z0(), seq_.distribution(j)));
    }
  }
}

std::vector<ScalarLaw> LawContext::laws_of(const std::vector<PathFunctional>& functionals) const {
  return functional_laws(seq_, functionals, engine_);
}

bool LawContext::rational() const {
  return engine_.kind == EngineKind::exact && seq_.is_exact() && seq_.instance().exact_metric();
}

}  // namespace msemi
