#pragma once

#include "qvt/space.hpp"

namespace qvt {

// base: infima range over the stored base members only.
// oracle: infima range over the full enumerated structure (guarded).
enum class Mode { base, oracle };

const char* mode_name(Mode mode);

ApproachDistance gauge_to_distance(const Quantale& q, const GaugeBase& base,
                                   Mode mode = Mode::base,
                                   const Limits& limits = Limits::defaults());

SystemBase distance_to_system(const Quantale& q, const ApproachDistance& dist);

GaugeBase system_to_gauge(const Quantale& q, const SystemBase& base,
                          const Limits& limits = Limits::defaults());

GaugeBase distance_to_gauge(const Quantale& q, const ApproachDistance& dist,
                            const Limits& limits = Limits::defaults());

ApproachDistance system_to_distance(const Quantale& q, const SystemBase& base,
                                    Mode mode = Mode::base,
                                    const Limits& limits = Limits::defaults());

Space transition(const Space& space, Presentation target,
                 Mode mode = Mode::base,
                 const Limits& limits = Limits::defaults());

}  // namespace qvt
