#pragma once

#include <vector>

#include "serrewt/alcove.hpp"

namespace serrewt {

using SigmaTemplate = std::vector<GraphCoord>;

const SigmaTemplate& sigma0();    // 9 entries
const SigmaTemplate& sigma_out(); // the 6 outer entries
SigmaTemplate flip_digits(const SigmaTemplate& s);

// base weight lam = mu + eta + (1,1,1): lam - eta is as deep as mu and carries the type's central character
std::vector<Vec3> default_base(const TypePresentation& tau);

// t_{mu+eta-lam} s applied to tmpl^f, in graph coordinates over lam
std::vector<GraphPoint> translate_template(const TypePresentation& tau, const std::vector<Vec3>& lam,
                                           const SigmaTemplate& tmpl);

// constituents of the reduction of R_s(mu+eta); exact when mu is 2-deep, an upper bound when 1-deep
bool jh_exact(const TypePresentation& tau);
std::vector<WeightPresentation> jh_set(const TypePresentation& tau, const std::vector<Vec3>& lam);
std::vector<WeightPresentation> jh_set(const TypePresentation& tau);
std::vector<WeightPresentation> jh_outer(const TypePresentation& tau, const std::vector<Vec3>& lam);
std::vector<WeightPresentation> jh_outer(const TypePresentation& tau);

// highest weights w.(t_{mu+eta} s (w_h w)^{-1}(0) - eta) over w in (W~_1^+/X^0)^f,
// with the Frobenius twist of the Serre weight parametrization
std::vector<std::vector<Vec3>> herzig_outer_oracle(const TypePresentation& tau);

std::vector<WeightPresentation> w_question(const TypePresentation& tau, const std::vector<Vec3>& lam);
std::vector<WeightPresentation> w_question(const TypePresentation& tau);

// a covers b: same eps per embedding, digit(b) <= digit(a)
bool covers(const WeightPresentation& a, const WeightPresentation& b);

} // namespace serrewt
