#include "frbf/monomial_sum.hpp"

#include <algorithm>
#include <cmath>

namespace frbf {

MonomialSum::MonomialSum(std::vector<MonomialTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const MonomialTerm& a, const MonomialTerm& b) {
              return a.power > b.power;
            });
  for (const auto& term : terms) {
    if (!terms_.empty() &&
        std::abs(terms_.back().power - term.power) < kPowerTolerance) {
      terms_.back().coefficient += term.coefficient;
    } else {
      terms_.push_back(term);
    }
  }
  std::erase_if(terms_, [](const MonomialTerm& t) { return t.coefficient == 0.0; });
}

double MonomialSum::operator()(double r) const {
  double value = 0.0;
  for (const auto& [c, p] : terms_) {
    value += c * std::pow(r, p);
  }
  return value;
}

MonomialSum MonomialSum::derivative(int order) const {
  std::vector<MonomialTerm> out;
  out.reserve(terms_.size());
  for (auto [c, p] : terms_) {
    for (int k = 0; k < order; ++k) {
      c *= p;
      p -= 1.0;
    }
    out.push_back({c, p});
  }
  return MonomialSum(std::move(out));
}

MonomialSum MonomialSum::scaled(double factor) const {
  std::vector<MonomialTerm> out = terms_;
  for (auto& t : out) t.coefficient *= factor;
  return MonomialSum(std::move(out));
}

MonomialSum operator+(const MonomialSum& a, const MonomialSum& b) {
  std::vector<MonomialTerm> out = a.terms_;
  out.insert(out.end(), b.terms_.begin(), b.terms_.end());
  return MonomialSum(std::move(out));
}

}  // namespace frbf
