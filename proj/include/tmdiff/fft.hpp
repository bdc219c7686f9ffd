#pragma once

#include <complex>
#include <cstdint>
#include <span>

namespace tmdiff {

constexpr bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 transform X_k = sum_n x_n exp(-2 pi i n k / N).
// N must be a power of two.
void fft_in_place(std::span<std::complex<double>> data);

}  // namespace tmdiff
