#include "quiverfin/fq_orbits.hpp"

#include <algorithm>
#include <vector>

namespace quiverfin {

namespace {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool is_prime(i64 p) {
  if (p < 2) return false;
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int mod_pow(int a, i64 e, int p) {
  i64 r = 1, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

int primitive_root(int p) {
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (int d = 1; d < p - 1 && ok; ++d)
      if (mod_pow(g, d, p) == 1) ok = false;
    if (ok) return g;
  }
  return 1;  // p == 2
}

// Square matrices over F_p, row-major, entries 0..p-1.
using Mat = std::vector<int>;

bool mat_invert(const Mat& m, Mat& inv, int n, int p) {
  Mat a = m;
  inv.assign(n * n, 0);
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r * n + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a[pivot * n + j], a[col * n + j]);
        std::swap(inv[pivot * n + j], inv[col * n + j]);
      }
    const int scale = mod_pow(a[col * n + col], p - 2, p);
    for (int j = 0; j < n; ++j) {
      a[col * n + j] = a[col * n + j] * scale % p;
      inv[col * n + j] = inv[col * n + j] * scale % p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const int f = a[r * n + col];
      if (!f) continue;
      for (int j = 0; j < n; ++j) {
        a[r * n + j] = (a[r * n + j] + (p - f) * a[col * n + j]) % p;
        inv[r * n + j] = (inv[r * n + j] + (p - f) * inv[col * n + j]) % p;
      }
    }
  }
  return true;
}

std::vector<Mat> gl_generators(int n, int p) {
  std::vector<Mat> gens;
  if (n <= 0) return gens;
  if (n == 1) {
    for (int a = 2; a < p; ++a) gens.push_back(Mat{a});
    return gens;
  }
  if (n == 2) {
    // Every invertible matrix (the identity adds nothing).
    Mat m(4);
    for (m[0] = 0; m[0] < p; ++m[0])
      for (m[1] = 0; m[1] < p; ++m[1])
        for (m[2] = 0; m[2] < p; ++m[2])
          for (m[3] = 0; m[3] < p; ++m[3]) {
            const int det = (m[0] * m[3] - m[1] * m[2]) % p;
            if ((det % p + p) % p == 0) continue;
            if (m[0] == 1 && m[1] == 0 && m[2] == 0 && m[3] == 1) continue;
            gens.push_back(m);
          }
    return gens;
  }
  // Transvections generate SL_n over a prime field; one primitive diagonal
  // extends them to GL_n.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Mat m(n * n, 0);
      for (int k = 0; k < n; ++k) m[k * n + k] = 1;
      m[i * n + j] = 1;
      gens.push_back(std::move(m));
    }
  const int g = primitive_root(p);
  if (g != 1) {
    Mat m(n * n, 0);
    for (int k = 0; k < n; ++k) m[k * n + k] = 1;
    m[0] = g;
    gens.push_back(std::move(m));
  }
  return gens;
}

}  // namespace

i64 count_orbits(const QuiverSetting& s, i64 q_prime, i64 budget) {
  if (!is_prime(q_prime)) throw std::invalid_argument("field size must be prime");
  if (budget < 1) throw std::invalid_argument("budget must be positive");
  const int p = static_cast<int>(q_prime);
  const Quiver& q = s.quiver;
  const int V = q.vertex_count();
  const int A = q.arrow_count();

  // Representation space size p^(sum of d(sa) d(ta)).
  i64 entries = 0;
  for (const Arrow& a : q.arrows()) entries += s.dim[a.src] * s.dim[a.dst];
  i64 points = 1;
  for (i64 i = 0; i < entries; ++i) {
    if (points > budget / p)
      throw BudgetError("representation space exceeds the orbit budget");
    points *= p;
  }
  if (points > 0xFFFFFFFFLL)
    throw BudgetError("representation space too large for the sweep index");

  // Group order prod_x prod_i (p^n - p^i), with early bail-out so huge
  // dimensions cannot overflow.
  {
    long double order = 1.0L;
    bool too_big = false;
    for (int x = 0; x < V && !too_big; ++x) {
      const i64 n = s.dim[x];
      long double pn = 1.0L;
      for (i64 i = 0; i < n && !too_big; ++i) {
        pn *= p;
        if (pn > 1e30L) too_big = true;
      }
      long double pi = 1.0L;
      for (i64 i = 0; i < n && !too_big; ++i) {
        order *= (pn - pi);
        pi *= p;
        if (order > 1e30L) too_big = true;
      }
    }
    if (too_big || order > static_cast<long double>(budget))
      throw BudgetError("acting group exceeds the orbit budget");
  }

  // Arrow slices in the flattened digit vector.
  struct Slice {
    int offset, rows, cols;
  };
  std::vector<Slice> slices(A);
  {
    int off = 0;
    for (int a = 0; a < A; ++a) {
      const Arrow& ar = q.arrows()[a];
      slices[a] = {off, static_cast<int>(s.dim[ar.dst]), static_cast<int>(s.dim[ar.src])};
      off += slices[a].rows * slices[a].cols;
    }
  }

  // Generators embedded per vertex, with precomputed inverse.
  struct VertexGen {
    int vertex;
    Mat g, ginv;
    int n;
  };
  std::vector<VertexGen> gens;
  for (int x = 0; x < V; ++x) {
    const int n = static_cast<int>(s.dim[x]);
    if (n == 0) continue;
    for (Mat& m : gl_generators(n, p)) {
      Mat inv;
      if (!mat_invert(m, inv, n, p)) throw InternalError("generator is singular");
      gens.push_back({x, std::move(m), std::move(inv), n});
    }
  }

  const auto N = static_cast<size_t>(points);
  std::vector<char> visited(N, 0);
  std::vector<u32> queue;
  std::vector<u8> digits(static_cast<size_t>(entries));
  std::vector<u8> work(static_cast<size_t>(entries));
  i64 maxd = 1;
  for (int x = 0; x < V; ++x) maxd = std::max(maxd, s.dim[x]);
  std::vector<int> scratch(static_cast<size_t>(maxd));

  auto decode = [&](u64 code, std::vector<u8>& out) {
    for (i64 i = 0; i < entries; ++i) {
      out[i] = static_cast<u8>(code % p);
      code /= p;
    }
  };
  auto encode = [&](const std::vector<u8>& in) {
    u64 code = 0;
    for (i64 i = entries - 1; i >= 0; --i) code = code * p + in[i];
    return code;
  };

  i64 orbits = 0;
  u64 swept = 0;
  for (u64 seed = 0; seed < N; ++seed) {
    if (visited[seed]) continue;
    ++orbits;
    visited[seed] = 1;
    ++swept;
    queue.clear();
    queue.push_back(static_cast<u32>(seed));
    while (!queue.empty()) {
      const u64 code = queue.back();
      queue.pop_back();
      decode(code, digits);
      for (const VertexGen& gen : gens) {
        work = digits;
        for (int a = 0; a < A; ++a) {
          const Arrow& ar = q.arrows()[a];
          const Slice& sl = slices[a];
          if (ar.dst == gen.vertex) {
            // M <- g M
            for (int j = 0; j < sl.cols; ++j) {
              for (int i = 0; i < sl.rows; ++i) {
                int acc = 0;
                for (int k = 0; k < sl.rows; ++k)
                  acc += gen.g[i * gen.n + k] * work[sl.offset + k * sl.cols + j];
                scratch[i] = acc % p;
              }
              for (int i = 0; i < sl.rows; ++i)
                work[sl.offset + i * sl.cols + j] = static_cast<u8>(scratch[i]);
            }
          }
          if (ar.src == gen.vertex) {
            // M <- M g^{-1}
            for (int i = 0; i < sl.rows; ++i) {
              for (int j = 0; j < sl.cols; ++j) {
                int acc = 0;
                for (int k = 0; k < sl.cols; ++k)
                  acc += work[sl.offset + i * sl.cols + k] * gen.ginv[k * gen.n + j];
                scratch[j] = acc % p;
              }
              for (int j = 0; j < sl.cols; ++j)
                work[sl.offset + i * sl.cols + j] = static_cast<u8>(scratch[j]);
            }
          }
        }
        const u64 img = encode(work);
        if (!visited[img]) {
          visited[img] = 1;
          ++swept;
          queue.push_back(static_cast<u32>(img));
        }
      }
    }
  }
  if (swept != N) throw InternalError("orbit sweep did not cover the point space");
  return orbits;
}

GrowthSignal growth_signal(const QuiverSetting& s, std::span<const i64> primes,
                           i64 budget) {
  std::vector<i64> counts;
  counts.reserve(primes.size());
  for (i64 p : primes) counts.push_back(count_orbits(s, p, budget));
  const bool constant =
      std::all_of(counts.begin(), counts.end(), [&](i64 c) { return c == counts[0]; });
  if (constant) return GrowthSignal::ConstantAcrossFields;
  bool growing = true;
  for (size_t i = 0; i + 1 < counts.size(); ++i)
    if (counts[i] >= counts[i + 1]) growing = false;
  return growing ? GrowthSignal::StrictlyGrowing : GrowthSignal::Inconclusive;
}

}  // namespace quiverfin
