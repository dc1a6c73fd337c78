#include <fftw3.h>

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

// 2D indicator convolution on a zero-padded (2G)x(2G) grid. Returns
// pair-count values (>= 1 where the dilation is occupied). FFTW plan
// creation is not thread-safe; execution is.

namespace minksym {

namespace {
std::mutex g_fftw_mutex;

struct FftwBuf {
    double* p;
    explicit FftwBuf(std::size_t n) : p(fftw_alloc_real(n)) {
        if (!p) throw std::bad_alloc();
    }
    ~FftwBuf() { fftw_free(p); }
    FftwBuf(const FftwBuf&) = delete;
    FftwBuf& operator=(const FftwBuf&) = delete;
};

struct FftwCBuf {
    fftw_complex* p;
    explicit FftwCBuf(std::size_t n) : p(fftw_alloc_complex(n)) {
        if (!p) throw std::bad_alloc();
    }
    ~FftwCBuf() { fftw_free(p); }
    FftwCBuf(const FftwCBuf&) = delete;
    FftwCBuf& operator=(const FftwCBuf&) = delete;
};
}  // namespace

std::vector<double> conv2d_counts(const std::vector<std::uint8_t>& a,
                                  const std::vector<std::uint8_t>& b, int G) {
    const int N = 2 * G;
    const std::size_t nreal = static_cast<std::size_t>(N) * N;
    const std::size_t ncplx = static_cast<std::size_t>(N) * (N / 2 + 1);

    FftwBuf ra(nreal), rb(nreal);
    FftwCBuf ca(ncplx), cb(ncplx);

    for (std::size_t i = 0; i < nreal; ++i) ra.p[i] = rb.p[i] = 0.0;
    for (int iy = 0; iy < G; ++iy)
        for (int ix = 0; ix < G; ++ix) {
            std::size_t src = static_cast<std::size_t>(iy) * G + ix;
            std::size_t dst = static_cast<std::size_t>(iy) * N + ix;
            ra.p[dst] = a[src];
            rb.p[dst] = b[src];
        }

    fftw_plan fa, fb, inv;
    {
        std::lock_guard<std::mutex> lock(g_fftw_mutex);
        fa = fftw_plan_dft_r2c_2d(N, N, ra.p, ca.p, FFTW_ESTIMATE);
        fb = fftw_plan_dft_r2c_2d(N, N, rb.p, cb.p, FFTW_ESTIMATE);
        inv = fftw_plan_dft_c2r_2d(N, N, ca.p, ra.p, FFTW_ESTIMATE);
    }
    fftw_execute(fa);
    fftw_execute(fb);
    const double scale = 1.0 / (static_cast<double>(N) * N);
    for (std::size_t i = 0; i < ncplx; ++i) {
        double re = ca.p[i][0] * cb.p[i][0] - ca.p[i][1] * cb.p[i][1];
        double im = ca.p[i][0] * cb.p[i][1] + ca.p[i][1] * cb.p[i][0];
        ca.p[i][0] = re * scale;
        ca.p[i][1] = im * scale;
    }
    fftw_execute(inv);
    {
        std::lock_guard<std::mutex> lock(g_fftw_mutex);
        fftw_destroy_plan(fa);
        fftw_destroy_plan(fb);
        fftw_destroy_plan(inv);
    }

    return std::vector<double>(ra.p, ra.p + nreal);
}

}  // namespace minksym
