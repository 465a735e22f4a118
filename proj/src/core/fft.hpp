#ifndef PLANARCALC_FFT_HPP
#define PLANARCALC_FFT_HPP

#include <complex>
#include <vector>

namespace planarcalc {

using cplx = std::complex<double>;

/** In-place radix-2 FFT; size must be a power of two. Forward uses the
 * e^{-i k theta} convention; inverse divides by the length. */
void fft_inplace(std::vector<cplx>& a, bool inverse);

std::vector<cplx> fft(std::vector<cplx> a);
std::vector<cplx> ifft(std::vector<cplx> a);

bool is_pow2(std::size_t n);

}  // namespace planarcalc

#endif
