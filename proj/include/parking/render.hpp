#pragma once

#include <string>

namespace parking {

/// SVG of the 3-dimensional Shi arrangement viewed in the plane x_1 + x_2 + x_3 = 0: the six
/// hyperplanes as <line> elements and one <text> label per region, placed at the region's
/// witness and reading its parking-function label. The output does not depend on `jobs`.
std::string render_shi3_svg(int jobs = 1);

}  // namespace parking
