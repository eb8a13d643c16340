#include "qpc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qpc {

namespace {

constexpr int kNTheta = 32;
constexpr int kNPhi = 64;
constexpr double kThetaStep = std::numbers::pi / (kNTheta - 1);
constexpr double kPhiStep = 2.0 * std::numbers::pi / kNPhi;
constexpr double kRefineStop = 1e-6;  // accepted move gaining less ends the search
constexpr double kStepFloor = 1e-4;

double wrap_phi(double x) {
  x = std::fmod(x, 2.0 * std::numbers::pi);
  if (x < 0) x += 2.0 * std::numbers::pi;
  return x;
}

struct Candidate {
  double value = std::numeric_limits<double>::infinity();
  long index = -1;
  double theta = 0;
  double phi = 0;
};

// Three lowest grid values; strict comparisons keep the earliest index on ties.
struct BestThree {
  std::array<Candidate, 3> c;
  void offer(double v, long idx, double th, double ph) {
    Candidate cand{v, idx, th, ph};
    if (v < c[0].value) {
      c[2] = c[1];
      c[1] = c[0];
      c[0] = cand;
    } else if (v < c[1].value) {
      c[2] = c[1];
      c[1] = cand;
    } else if (v < c[2].value) {
      c[2] = cand;
    }
  }
};

template <class F>  // F: (theta, phi) -> double
Candidate refine_candidate(F&& f, Candidate cur) {
  static constexpr int kOff[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                     {0, 1},   {1, -1}, {1, 0},  {1, 1}};
  double dth = kThetaStep / 2;
  double dph = kPhiStep / 2;
  while (dth > kStepFloor) {
    Candidate best = cur;
    for (auto& o : kOff) {
      double th = std::clamp(cur.theta + o[0] * dth, 0.0, std::numbers::pi);
      double ph = wrap_phi(cur.phi + o[1] * dph);
      double v = f(th, ph);
      if (v < best.value) best = Candidate{v, cur.index, th, ph};
    }
    if (best.value < cur.value) {
      double gain = cur.value - best.value;
      cur = best;
      if (gain < kRefineStop) break;
    } else {
      dth *= 0.5;
      dph *= 0.5;
    }
  }
  return cur;
}

template <class F>
Candidate refine_best_three(F&& f, const BestThree& top) {
  Candidate best;
  for (const auto& c : top.c) {
    if (c.index < 0) continue;
    Candidate r = refine_candidate(f, c);
    if (r.value < best.value) best = r;
  }
  return best;
}

// Fused kernel: for the measurement basis (theta, phi) on the last qubit the
// two conditional blocks M+- are combinations of the four stride-2 blocks of
// rho. Their joint spectrum gives the dephased entropy directly and the
// conditional entropy as deph - H({p+, p-}).
template <int N>
MeasurementScan scan_impl(const ComplexMatrix& rho_p, int dx) {
  using Mat = Eigen::Matrix<Complex, N, N>;
  Mat a00(dx, dx), a01(dx, dx), a11(dx, dx);
  for (int i = 0; i < dx; ++i)
    for (int j = 0; j < dx; ++j) {
      a00(i, j) = rho_p(2 * i, 2 * j);
      a01(i, j) = rho_p(2 * i, 2 * j + 1);
      a11(i, j) = rho_p(2 * i + 1, 2 * j + 1);
    }
  Mat a10 = a01.adjoint();
  Mat mp(dx, dx), mm(dx, dx);
  Eigen::SelfAdjointEigenSolver<Mat> es;

  auto eval = [&](double th, double ph) {
    double c = std::cos(th / 2), s = std::sin(th / 2);
    Complex w = (c * s) * std::polar(1.0, ph);
    mp = Complex(c * c) * a00 + Complex(s * s) * a11 + w * a01 + std::conj(w) * a10;
    mm = Complex(s * s) * a00 + Complex(c * c) * a11 - w * a01 - std::conj(w) * a10;
    double deph = 0, pp = 0, pm = 0;
    es.compute(mp, Eigen::EigenvaluesOnly);
    for (int k = 0; k < dx; ++k) {
      double lam = es.eigenvalues()[k];
      pp += lam;
      if (lam > 0) deph -= lam * std::log2(lam);
    }
    es.compute(mm, Eigen::EigenvaluesOnly);
    for (int k = 0; k < dx; ++k) {
      double lam = es.eigenvalues()[k];
      pm += lam;
      if (lam > 0) deph -= lam * std::log2(lam);
    }
    double hp = 0;
    if (pp > 0) hp -= pp * std::log2(pp);
    if (pm > 0) hp -= pm * std::log2(pm);
    return std::pair<double, double>(deph - hp, deph);
  };

  BestThree cond, deph;
  for (int i = 0; i < kNTheta; ++i) {
    double th = i * kThetaStep;
    for (int j = 0; j < kNPhi; ++j) {
      double ph = j * kPhiStep;
      auto [vc, vd] = eval(th, ph);
      long idx = static_cast<long>(i) * kNPhi + j;
      cond.offer(vc, idx, th, ph);
      deph.offer(vd, idx, th, ph);
    }
  }
  Candidate rc = refine_best_three([&](double t, double p) { return eval(t, p).first; }, cond);
  Candidate rd = refine_best_three([&](double t, double p) { return eval(t, p).second; }, deph);
  return {rc.value, {rc.theta, rc.phi}, rd.value, {rd.theta, rd.phi}};
}

double product_dim(const std::vector<int>& dims, const std::vector<int>& parties) {
  double d = 1;
  for (int p : parties) d *= dims[p];
  return d;
}

double entropy_of(const ComplexMatrix& rho) { return entropy_bits(hermitian_spectrum(rho)); }

bool identity_order(const std::vector<int>& order) {
  for (size_t i = 0; i < order.size(); ++i)
    if (order[i] != static_cast<int>(i)) return false;
  return true;
}

double table_entropy(const std::vector<double>& p) {
  double h = 0;
  for (double x : p)
    if (x > 0) h -= x * std::log2(x);
  return h;
}

}  // namespace

BipartitionSpec BipartitionSpec::parse(const std::string& text, int n_parties) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("bipartition must contain ':', e.g. AB:C");
  auto side = [n_parties](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("bipartition side is empty");
    std::vector<int> v;
    for (char ch : part) {
      if (ch < 'A' || ch > 'Z') throw std::invalid_argument("party labels are A, B, C, ...");
      int p = ch - 'A';
      if (p >= n_parties)
        throw std::invalid_argument(std::string("party ") + ch + " beyond the last party");
      v.push_back(p);
    }
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
      throw std::invalid_argument("duplicate party in bipartition");
    return v;
  };
  BipartitionSpec spec{side(text.substr(0, colon)), side(text.substr(colon + 1))};
  std::vector<int> all(n_parties);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> both;
  std::merge(spec.side_x.begin(), spec.side_x.end(), spec.side_y.begin(), spec.side_y.end(),
             std::back_inserter(both));
  if (both != all) throw std::invalid_argument("bipartition must cover every party once");
  return spec;
}

void BipartitionSpec::validate(const std::vector<int>& dims) const {
  int n = static_cast<int>(dims.size());
  if (side_x.empty() || side_y.empty())
    throw std::invalid_argument("both bipartition sides must be nonempty");
  auto sorted_within = [n](const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0 || v[i] >= n) throw std::invalid_argument("party index out of range");
      if (i > 0 && v[i] <= v[i - 1])
        throw std::invalid_argument("bipartition sides must be sorted and duplicate-free");
    }
  };
  sorted_within(side_x);
  sorted_within(side_y);
  std::vector<int> both;
  std::merge(side_x.begin(), side_x.end(), side_y.begin(), side_y.end(),
             std::back_inserter(both));
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  if (both != all) throw std::invalid_argument("bipartition must cover every party once");
}

int BipartitionSpec::dim_x(const std::vector<int>& dims) const {
  return static_cast<int>(product_dim(dims, side_x));
}

int BipartitionSpec::dim_y(const std::vector<int>& dims) const {
  return static_cast<int>(product_dim(dims, side_y));
}

const char* measure_tag(MeasureKind k) {
  switch (k) {
    case MeasureKind::negativity: return "neg";
    case MeasureKind::log_negativity: return "logneg";
    case MeasureKind::qmi: return "qmi";
    case MeasureKind::measured_mi: return "mmi";
    case MeasureKind::discord: return "discord";
    case MeasureKind::work_deficit: return "workdef";
  }
  return "?";
}

std::optional<MeasureKind> measure_from_tag(const std::string& tag) {
  for (MeasureKind k : kAllMeasureKinds)
    if (tag == measure_tag(k)) return k;
  return std::nullopt;
}

bool needs_measurement(MeasureKind k) {
  return k == MeasureKind::measured_mi || k == MeasureKind::discord ||
         k == MeasureKind::work_deficit;
}

std::array<ComplexMatrix, 2> measurement_projectors(const MeasurementOnQubit& m) {
  double c = std::cos(m.theta / 2), s = std::sin(m.theta / 2);
  Complex w = std::polar(1.0, m.phi);
  Eigen::Vector2cd up(c, w * s), dn(s, -w * c);
  return {up * up.adjoint(), dn * dn.adjoint()};
}

MeasurementScan scan_qubit_measurements(const MultipartiteState& state,
                                        const BipartitionSpec& split) {
  split.validate(state.dims);
  if (split.side_y.size() != 1 || state.dims[split.side_y[0]] != 2)
    throw std::invalid_argument("measured side must be a single qubit");
  std::vector<int> order = split.side_x;
  order.push_back(split.side_y[0]);
  const ComplexMatrix& rho_p =
      identity_order(order) ? state.rho : permute_parties(state.rho, state.dims, order);
  int dx = static_cast<int>(rho_p.rows() / 2);
  if (dx == 2) return scan_impl<2>(rho_p, dx);
  if (dx == 4) return scan_impl<4>(rho_p, dx);
  return scan_impl<Eigen::Dynamic>(rho_p, dx);
}

std::pair<MeasurementOnQubit, double> optimize_measurement(
    const std::function<double(const MeasurementOnQubit&)>& objective) {
  auto f = [&](double th, double ph) { return objective(MeasurementOnQubit{th, ph}); };
  BestThree top;
  for (int i = 0; i < kNTheta; ++i) {
    double th = i * kThetaStep;
    for (int j = 0; j < kNPhi; ++j) {
      double ph = j * kPhiStep;
      top.offer(f(th, ph), static_cast<long>(i) * kNPhi + j, th, ph);
    }
  }
  Candidate best = refine_best_three(f, top);
  return {MeasurementOnQubit{best.theta, best.phi}, best.value};
}

MeasureSet compute_measures(const MultipartiteState& state, const BipartitionSpec& split,
                            const std::vector<MeasureKind>& kinds) {
  split.validate(state.dims);
  if (kinds.empty()) throw std::invalid_argument("no measures requested");

  int dx = split.dim_x(state.dims);
  int dy = split.dim_y(state.dims);
  double log2_min = std::log2(static_cast<double>(std::min(dx, dy)));

  bool want_entropies = false, want_trace_norm = false, want_scan = false;
  for (MeasureKind k : kinds) {
    want_entropies |= k != MeasureKind::negativity && k != MeasureKind::log_negativity;
    want_trace_norm |= k == MeasureKind::negativity || k == MeasureKind::log_negativity;
    want_scan |= needs_measurement(k);
  }

  MeasureSet out;
  out.entropy_x = entropy_of(partial_trace(state.rho, state.dims, split.side_x));
  double log2_dx = std::log2(static_cast<double>(dx));
  out.purity_x = (log2_dx - out.entropy_x) / log2_dx;
  if (want_entropies) {
    out.entropy_y = entropy_of(partial_trace(state.rho, state.dims, split.side_y));
    out.entropy_xy = entropy_of(state.rho);
  }
  double tn =
      want_trace_norm ? trace_norm(partial_transpose(state.rho, state.dims, split.side_y)) : 0;
  MeasurementScan scan;
  if (want_scan) scan = scan_qubit_measurements(state, split);

  double qmi_raw = out.entropy_x + out.entropy_y - out.entropy_xy;
  double mmi_raw = out.entropy_x - scan.min_conditional_entropy;
  for (MeasureKind k : kinds) {
    MeasureValue v;
    switch (k) {
      case MeasureKind::negativity:
        v.raw = (tn - 1.0) / 2.0;
        v.normalized = v.raw / ((std::min(dx, dy) - 1) / 2.0);
        break;
      case MeasureKind::log_negativity:
        v.raw = std::log2(tn);
        v.normalized = v.raw / log2_min;
        break;
      case MeasureKind::qmi:
        v.raw = qmi_raw;
        v.normalized = v.raw / (2.0 * log2_min);
        break;
      case MeasureKind::measured_mi:
        v.raw = mmi_raw;
        v.normalized = v.raw / log2_min;
        break;
      case MeasureKind::discord:
        v.raw = qmi_raw - mmi_raw;
        v.normalized = v.raw / log2_min;
        break;
      case MeasureKind::work_deficit:
        v.raw = scan.min_dephased_entropy - out.entropy_xy;
        v.normalized = v.raw / log2_min;
        break;
    }
    out.values.emplace_back(k, v);
  }
  return out;
}

double purity_normalized(const MultipartiteState& state, const std::vector<int>& part) {
  ComplexMatrix reduced = partial_trace(state.rho, state.dims, part);
  double log2_d = std::log2(static_cast<double>(reduced.rows()));
  return (log2_d - entropy_of(reduced)) / log2_d;
}

namespace {
MeasureValue single(const MultipartiteState& s, const BipartitionSpec& split, MeasureKind k) {
  return compute_measures(s, split, {k}).values.front().second;
}
}  // namespace

double negativity_normalized(const MultipartiteState& state, const BipartitionSpec& split) {
  return single(state, split, MeasureKind::negativity).normalized;
}

double log_negativity_normalized(const MultipartiteState& state, const BipartitionSpec& split) {
  return single(state, split, MeasureKind::log_negativity).normalized;
}

MeasureValue quantum_mutual_information(const MultipartiteState& state,
                                        const BipartitionSpec& split) {
  return single(state, split, MeasureKind::qmi);
}

MeasureValue measured_mutual_information(const MultipartiteState& state,
                                         const BipartitionSpec& split) {
  return single(state, split, MeasureKind::measured_mi);
}

MeasureValue quantum_discord(const MultipartiteState& state, const BipartitionSpec& split) {
  return single(state, split, MeasureKind::discord);
}

MeasureValue work_deficit(const MultipartiteState& state, const BipartitionSpec& split) {
  return single(state, split, MeasureKind::work_deficit);
}

double classical_mutual_information(const MultipartiteState& state,
                                    const BipartitionSpec& split,
                                    const std::vector<ComplexMatrix>& meas_x,
                                    const std::vector<ComplexMatrix>& meas_y) {
  split.validate(state.dims);
  int dx = split.dim_x(state.dims);
  int dy = split.dim_y(state.dims);
  auto check_family = [](const std::vector<ComplexMatrix>& fam, int d) {
    if (fam.empty()) throw std::invalid_argument("empty projector family");
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& p : fam) {
      if (p.rows() != d || p.cols() != d)
        throw std::invalid_argument("projector dimension mismatch");
      sum += p;
    }
    if ((sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > kHermitianTol)
      throw std::invalid_argument("projector family does not sum to the identity");
  };
  check_family(meas_x, dx);
  check_family(meas_y, dy);

  std::vector<int> order = split.side_x;
  order.insert(order.end(), split.side_y.begin(), split.side_y.end());
  ComplexMatrix rho_p =
      identity_order(order) ? state.rho : permute_parties(state.rho, state.dims, order);

  std::vector<double> joint;
  std::vector<double> px(meas_x.size(), 0), py(meas_y.size(), 0);
  joint.reserve(meas_x.size() * meas_y.size());
  for (size_t j = 0; j < meas_x.size(); ++j)
    for (size_t k = 0; k < meas_y.size(); ++k) {
      double p = (tensor_product(meas_x[j], meas_y[k]) * rho_p).trace().real();
      p = std::max(p, 0.0);
      joint.push_back(p);
      px[j] += p;
      py[k] += p;
    }
  return table_entropy(px) + table_entropy(py) - table_entropy(joint);
}

}  // namespace qpc
