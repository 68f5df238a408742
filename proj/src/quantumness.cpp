#include "qchan/quantumness.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "qchan/errors.hpp"
#include "qchan/rng.hpp"

namespace qchan {

LMatrix::LMatrix(const Mat3& m) : m_(m) {
  const double asym = asymmetry(m_);
  if (asym > 1e-14)
    throw NotSymmetric("L matrix asymmetry " + std::to_string(asym));
}

LMatrix l_matrix(const AffineRep& rep) {
  Mat3 aat = rep.a * transpose(rep.a);
  Mat3 bbt;
  const double b[3] = {rep.b.x, rep.b.y, rep.b.z};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) bbt(i, j) = b[i] * b[j];
  Mat3 l = 0.5 * (aat + 5.0 * bbt);
  // AA^T and BB^T are symmetric by construction; enforce exact symmetry so
  // rounding in the matrix product cannot trip the LMatrix invariant.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const double avg = 0.5 * (l(i, j) + l(j, i));
      l(i, j) = l(j, i) = avg;
    }
  return LMatrix(l);
}

EigenTriple eigenvalues_desc(const Mat3& symmetric) {
  const double asym = asymmetry(symmetric);
  if (asym > 1e-12)
    throw NotSymmetric("matrix asymmetry " + std::to_string(asym) +
                       " exceeds 1e-12");
  double ev[3];
  jacobi_eigen_sym(symmetric.e.data(), 3, ev);
  return {ev[0], ev[1], ev[2]};
}

EigenTriple eigenvalues_desc(const LMatrix& m) {
  return eigenvalues_desc(m.matrix());
}

std::pair<EigenTriple, Mat3> eigen_decomposition(const Mat3& symmetric) {
  const double asym = asymmetry(symmetric);
  if (asym > 1e-12)
    throw NotSymmetric("matrix asymmetry " + std::to_string(asym) +
                       " exceeds 1e-12");
  double ev[3];
  Mat3 vecs;
  jacobi_eigen_sym(symmetric.e.data(), 3, ev, vecs.e.data());
  return {EigenTriple{ev[0], ev[1], ev[2]}, vecs};
}

double quantumness(const KrausChannel& channel) {
  const EigenTriple ev = eigenvalues_desc(l_matrix(affine_rep(channel)));
  return ev.l2 + ev.l3;
}

double average_fidelity_analytic(const KrausChannel& channel) {
  return 0.5 + trace(affine_rep(channel).a) / 6.0;
}

namespace {

// Pure input drawn from (z, phi); fidelity against the channel output
// reduces to Tr[rho rho'] because det(rho) = 0 for pure inputs.
double sample_fidelity(const KrausChannel& channel, std::uint64_t seed,
                       std::uint64_t i) {
  const double z = 2.0 * rng::u01_at(seed, 2 * i) - 1.0;
  const double phi = 2.0 * std::numbers::pi * rng::u01_at(seed, 2 * i + 1);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));

  Mat2 rho;
  rho(0, 0) = cplx(0.5 * (1.0 + z), 0.0);
  rho(1, 1) = cplx(0.5 * (1.0 - z), 0.0);
  rho(0, 1) = cplx(0.5 * r * std::cos(phi), -0.5 * r * std::sin(phi));
  rho(1, 0) = std::conj(rho(0, 1));

  const Mat2 out = apply_to_matrix(channel, rho);
  return std::real(trace(rho * out));
}

struct ChunkSums {
  double sum = 0.0;
  double sum_sq = 0.0;
};

constexpr long long kChunk = 1 << 16;

}  // namespace

FidelityEstimate average_fidelity_mc(const KrausChannel& channel,
                                     long long samples, std::uint64_t seed,
                                     int threads) {
  if (samples < 1) throw OutOfRange("mc sample count must be >= 1");
  if (!check_completeness(channel, tol::kCompleteness))
    throw IncompleteKraus("completeness residual exceeds 1e-9");

  const long long n_chunks = (samples + kChunk - 1) / kChunk;
  std::vector<ChunkSums> partial(static_cast<std::size_t>(n_chunks));

  auto run_chunk = [&](long long c) {
    const long long begin = c * kChunk;
    const long long end = std::min(samples, begin + kChunk);
    ChunkSums acc;
    for (long long i = begin; i < end; ++i) {
      const double f =
          sample_fidelity(channel, seed, static_cast<std::uint64_t>(i));
      acc.sum += f;
      acc.sum_sq += f * f;
    }
    partial[static_cast<std::size_t>(c)] = acc;
  };

  long long n_threads =
      threads > 0 ? threads
                  : static_cast<long long>(std::thread::hardware_concurrency());
  n_threads = std::max<long long>(1, std::min(n_threads, n_chunks));

  if (n_threads == 1) {
    for (long long c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (long long w = 0; w < n_threads; ++w) {
      pool.emplace_back([&, w] {
        for (long long c = w; c < n_chunks; c += n_threads) run_chunk(c);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  // Reduce in fixed chunk order; values depend only on (samples, seed).
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const ChunkSums& p : partial) {
    sum += p.sum;
    sum_sq += p.sum_sq;
  }

  FidelityEstimate est;
  est.samples = samples;
  est.mean = sum / static_cast<double>(samples);
  if (samples > 1) {
    const double var =
        std::max(0.0, (sum_sq - sum * est.mean) / static_cast<double>(samples - 1));
    est.std_error = std::sqrt(var / static_cast<double>(samples));
  }
  return est;
}

}  // namespace qchan
