#include "simplex_sections/direction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "simplex_sections/errors.hpp"

namespace simplex_sections {

Direction::Direction(Vec entries) : a_(std::move(entries)) {
  if (a_.size() < 2) throw SectionError(ErrorCode::DegenerateInput, "direction needs n+1 >= 2 entries");
  for (double x : a_)
    if (!std::isfinite(x)) throw SectionError(ErrorCode::DegenerateInput, "non-finite coordinate");
  input_norm_ = simplex_sections::norm(a_);
  if (input_norm_ == 0.0) throw SectionError(ErrorCode::DegenerateInput, "zero direction");
  for (auto& x : a_) x /= input_norm_;
  norm_ = simplex_sections::norm(a_);
  ksum_ = sum(a_);
}

Direction Direction::exact(Vec entries, double tol) {
  const double nv = simplex_sections::norm(entries);
  if (std::abs(nv - 1.0) > tol)
    throw SectionError(ErrorCode::DegenerateInput, "direction is not unit length");
  return Direction(std::move(entries));
}

int Direction::positive_count() const noexcept {
  return static_cast<int>(std::count_if(a_.begin(), a_.end(), [](double x) { return x > 0.0; }));
}

int Direction::negative_count() const noexcept {
  return static_cast<int>(std::count_if(a_.begin(), a_.end(), [](double x) { return x < 0.0; }));
}

Direction Direction::canonical() const {
  Vec v = a_;
  if (ksum_ < 0.0)
    for (auto& x : v) x = -x;
  std::sort(v.begin(), v.end(), std::greater<>());
  return Direction(std::move(v));
}

Direction Direction::negated() const { return Direction(scaled(a_, -1.0)); }

CentralForm CentralForm::make(Vec a0, double t) {
  Direction d(std::move(a0));
  if (std::abs(d.ksum()) >= 1e-12)
    throw SectionError(ErrorCode::DegenerateInput, "central form needs sum(a) = 0");
  if (!std::isfinite(t)) throw SectionError(ErrorCode::DegenerateInput, "non-finite offset");
  return CentralForm{std::move(d), t};
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Residue: return "residue";
    case Method::Quadrature: return "quadrature";
    case Method::Oracle: return "oracle";
    case Method::MonteCarlo: return "monte-carlo";
    case Method::ClosedForm: return "closed-form";
  }
  return "unknown";
}

}  // namespace simplex_sections
