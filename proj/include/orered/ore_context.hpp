#pragma once

#include <string>

#include "orered/error.hpp"
#include "orered/ratfun.hpp"

namespace orered {

enum class Twist { Identity, Shift };
enum class Derivation { DDx, Zero };

/// Commutation data (sigma, delta) of K(x)[D; sigma, delta], where
/// D*c = sigma(c)*D + delta(c). Only the two shipped pairs are valid.
class OreContext {
 public:
  OreContext(Twist twist, Derivation derivation) : twist_(twist), derivation_(derivation) {
    const bool differential = twist == Twist::Identity && derivation == Derivation::DDx;
    const bool shift = twist == Twist::Shift && derivation == Derivation::Zero;
    if (!differential && !shift)
      fail(ErrorKind::InvalidContext, "only (identity, d/dx) and (shift, 0) are supported");
  }

  static OreContext differential() { return {Twist::Identity, Derivation::DDx}; }
  static OreContext shift() { return {Twist::Shift, Derivation::Zero}; }

  Twist twist() const noexcept { return twist_; }
  Derivation derivation() const noexcept { return derivation_; }

  /// The differential ring Q(x)[D] is simple; in the shift ring D generates a
  /// proper two-sided ideal.
  bool is_simple() const noexcept { return twist_ == Twist::Identity; }
  bool is_differential() const noexcept { return twist_ == Twist::Identity; }

  /// sigma^power(c); negative powers apply the inverse automorphism.
  RatFun twist(const RatFun& c, int power = 1) const {
    if (twist_ == Twist::Identity || power == 0) return c;
    return c.shifted(Rational(power));
  }

  RatFun derive(const RatFun& c) const {
    if (derivation_ == Derivation::Zero) return {};
    return c.derivative();
  }

  std::string name() const { return is_differential() ? "differential" : "shift"; }

  friend bool operator==(const OreContext&, const OreContext&) = default;

 private:
  Twist twist_;
  Derivation derivation_;
};

}  // namespace orered
