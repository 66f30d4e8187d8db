#include "msemi/completion.hpp"

#include "msemi/errors.hpp"

namespace msemi {

MonoidCompletion::MonoidCompletion(InstancePtr base) : base_(std::move(base)) {
  if (!base_) throw DomainError("monoid completion of a null instance");
  if (base_->capabilities().has_identity) throw DomainError(base_->name() + " already has an identity");
  probe_ = base_->probe();
}

Capabilities MonoidCompletion::capabilities() const {
  auto c = base_->capabilities();
  c.has_identity = true;
  c.group = false;
  return c;
}

void MonoidCompletion::validate(const Element& x) const {
  if (x.is_adjoined_unit()) return;
  base_->validate(x);
}

std::vector<Element> MonoidCompletion::elements() const {
  auto out = base_->elements();
  out.push_back(Element::adjoined_unit());
  return out;
}

Element MonoidCompletion::sample(Rng& rng) const {
  if (uniform_below(rng, 8) == 0) return Element::adjoined_unit();
  return base_->sample(rng);
}

Element MonoidCompletion::parse_element(const nlohmann::json& j) const {
  if (j.is_string() && (j.get<std::string>() == "1'" || j.get<std::string>() == "identity")) {
    return Element::adjoined_unit();
  }
  return base_->parse_element(j);
}

nlohmann::json MonoidCompletion::format_element(const Element& x) const {
  if (x.is_adjoined_unit()) return "1'";
  return base_->format_element(x);
}

double MonoidCompletion::distance_to_unit_via(const Element& probe, const Element& z) const {
  base_->validate(probe);
  if (z.is_adjoined_unit()) return 0.0;
  return base_->distance(probe, base_->compose(probe, z));
}

Element MonoidCompletion::compose_unchecked(const Element& a, const Element& b) const {
  if (a.is_adjoined_unit()) return b;
  if (b.is_adjoined_unit()) return a;
  return base_->compose(a, b);
}

double MonoidCompletion::distance_unchecked(const Element& a, const Element& b) const {
  if (a.is_adjoined_unit() && b.is_adjoined_unit()) return 0.0;
  if (a.is_adjoined_unit()) return distance_to_unit_via(probe_, b);
  if (b.is_adjoined_unit()) return distance_to_unit_via(probe_, a);
  return base_->distance(a, b);
}

InstancePtr adjoin_identity(const InstancePtr& inst) {
  if (!inst) throw DomainError("adjoin_identity of a null instance");
  if (inst->capabilities().has_identity) return inst;
  return std::make_shared<const MonoidCompletion>(inst);
}

}  // namespace msemi
