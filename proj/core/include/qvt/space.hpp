#pragma once

#include <variant>

#include "qvt/distance.hpp"
#include "qvt/gauge.hpp"
#include "qvt/system.hpp"

namespace qvt {

enum class Presentation { gauge, distance, system };

const char* presentation_name(Presentation p);

/// A quantale, a carrier and exactly one validated structure presentation.
struct Space {
  Quantale quantale;
  Carrier carrier;
  std::variant<GaugeBase, ApproachDistance, SystemBase> structure;

  Presentation presentation() const {
    return static_cast<Presentation>(structure.index());
  }
  const GaugeBase& gauge() const { return std::get<GaugeBase>(structure); }
  const ApproachDistance& distance() const {
    return std::get<ApproachDistance>(structure);
  }
  const SystemBase& system() const { return std::get<SystemBase>(structure); }
};

}  // namespace qvt
