#include "detail_fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>

namespace pego::detail {

namespace {

// fftw planning is not thread-safe; execution on distinct buffers is.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

fftw_plan plan_for(int n) {
  static std::map<int, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(plan_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  fftw_complex* buf_in = fftw_alloc_complex(n);
  fftw_complex* buf_out = fftw_alloc_complex(n);
  fftw_plan plan = fftw_plan_dft_1d(n, buf_in, buf_out, FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_free(buf_in);
  fftw_free(buf_out);
  cache.emplace(n, plan);
  return plan;
}

struct FftwBuffer {
  fftw_complex* data;
  explicit FftwBuffer(int n) : data(fftw_alloc_complex(n)) {}
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
};

std::vector<std::complex<double>> run_dft(const std::complex<double>* in, int n_in, int n) {
  FftwBuffer a(n), b(n);
  std::memset(a.data, 0, sizeof(fftw_complex) * n);
  std::memcpy(a.data, in, sizeof(fftw_complex) * n_in);
  fftw_execute_dft(plan_for(n), a.data, b.data);
  std::vector<std::complex<double>> out(n);
  // std::complex<double> is layout-compatible with fftw_complex (double[2]).
  std::memcpy(reinterpret_cast<double*>(out.data()), b.data, sizeof(fftw_complex) * n);
  return out;
}

int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in) {
  return run_dft(in.data(), static_cast<int>(in.size()), static_cast<int>(in.size()));
}

std::vector<std::complex<double>> convolve_linear(const std::vector<std::complex<double>>& a,
                                                  const std::vector<std::complex<double>>& b) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  const int n_out = na + nb - 1;
  if (na == 0 || nb == 0) return {};
  if (static_cast<long long>(na) * nb <= 65536) {
    // Direct form for small inputs.
    std::vector<std::complex<double>> out(n_out, {0.0, 0.0});
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j) out[i + j] += a[i] * b[j];
    return out;
  }
  const int n = next_pow2(n_out);
  auto fa = run_dft(a.data(), na, n);
  auto fb = run_dft(b.data(), nb, n);
  for (int i = 0; i < n; ++i) fa[i] = std::conj(fa[i] * fb[i]);
  auto inv = dft(fa);  // conj-trick inverse: conj(DFT(conj(X)))/n
  std::vector<std::complex<double>> out(n_out);
  const double scale = 1.0 / n;
  for (int i = 0; i < n_out; ++i) out[i] = std::conj(inv[i]) * scale;
  return out;
}

}  // namespace pego::detail
