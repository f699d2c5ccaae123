#pragma once

#include <span>
#include <vector>

#include "opcalc/types.hpp"

namespace opcalc {

/// X_m = sum_n x_n exp(-2 pi i m n / N) (unnormalized).
std::vector<cplx> fft_forward(std::span<const cplx> x);
/// x_n = (1/N) sum_m X_m exp(2 pi i m n / N).
std::vector<cplx> fft_inverse(std::span<const cplx> spectrum);

}  // namespace opcalc
