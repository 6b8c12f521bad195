#pragma once

#include <string>

#include "polyid/instance.hpp"

namespace polyid {

/// SVG picture of the instance: cells as 40px squares, interval-family
/// members as strokes (horizontal red, vertical blue), the special interval
/// as a translucent green rect. Integer geometry only, so equal instances
/// give byte-equal documents. Instances whose family is out of scope render
/// cells alone.
std::string render_svg(const Instance& inst);

}  // namespace polyid
