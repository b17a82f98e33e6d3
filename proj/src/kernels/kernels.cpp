#include "trajoracle/kernels.hpp"

#include "kernels_detail.hpp"

namespace trajoracle::kernels {

const Backend* avx2_backend();  // defined in kernels_avx2.cpp, null if unusable

namespace {

void case4_profile_scalar(const Case4ProfileParams& k, const double* p, double* f,
                          std::size_t n) {
  detail::case4_profile_scalar_n(k, p, f, n);
}

void oracle_row_scalar(const OracleRowParams& k, const double* c, double* err,
                       std::size_t n) {
  detail::oracle_row_scalar_n(k, c, err, n);
}

}  // namespace

const Backend& scalar_backend() noexcept {
  static const Backend backend{"scalar", &case4_profile_scalar, &oracle_row_scalar};
  return backend;
}

const Backend& active_backend() noexcept {
  static const Backend* chosen = [] {
    if (const Backend* simd = avx2_backend()) return simd;
    return &scalar_backend();
  }();
  return *chosen;
}

std::vector<const Backend*> available_backends() {
  std::vector<const Backend*> out{&scalar_backend()};
  if (const Backend* simd = avx2_backend()) out.push_back(simd);
  return out;
}

}  // namespace trajoracle::kernels
