#include "qcoex/fiber.hpp"

#include <string>
#include <utility>

#include "qcoex/errors.hpp"

namespace qcoex {

FiberSpec::FiberSpec(Length length, AttenuationProfile attenuation, SprsEfficiencyProfile sprs,
                     FiberConstants constants)
    : length_(length), attenuation_(std::move(attenuation)), sprs_(std::move(sprs)), constants_(constants) {
  if (!(length_.km() > 0.0)) throw DomainError("fiber length must be > 0 km, got " + detail::num(length_.km()));
}

FiberSpec FiberSpec::with_length(Length length) const {
  return FiberSpec(length, attenuation_, sprs_, constants_);
}

FiberSpec FiberSpec::with_sprs(SprsEfficiencyProfile sprs) const {
  return FiberSpec(length_, attenuation_, std::move(sprs), constants_);
}

FiberSpec FiberSpec::with_constants(FiberConstants constants) const {
  return FiberSpec(length_, attenuation_, sprs_, constants);
}

}  // namespace qcoex
