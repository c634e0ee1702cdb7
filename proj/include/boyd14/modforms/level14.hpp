#pragma once

#include <map>
#include <string>

namespace boyd14::modforms {

// Images w_m(infinity) of the cusps of X0(14) on Y^2 + 5XY + 7Y = X^3, read
// off the log-derivative decompositions of X + 1, Y and Y + 7X against the
// known divisors 2[Q] - 2[0], 3[P] - 3[0], 2[P+Q] + [P] - 3[0].
// Returns m -> "0", "P", "Q" or "P+Q".
std::map<long, std::string> cusp_images_14(int order = 60);

}  // namespace boyd14::modforms
