#include "skewlines/bracket.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <thread>

#include "skewlines/error.hpp"

namespace skewlines {

std::string to_string(LoopFactor f) {
  switch (f) {
    case LoopFactor::One: return "1";
    case LoopFactor::A2PlusAm2: return "A^2+A^-2";
    case LoopFactor::MinusA2MinusAm2: return "-A^2-A^-2";
    case LoopFactor::APlusAm1: return "A+A^-1";
  }
  return "?";
}

LoopFactor parse_loop_factor(const std::string& s) {
  for (auto f : {LoopFactor::One, LoopFactor::A2PlusAm2, LoopFactor::MinusA2MinusAm2, LoopFactor::APlusAm1}) {
    if (s == to_string(f)) return f;
  }
  if (s == "One") return LoopFactor::One;
  if (s == "A2PlusAm2") return LoopFactor::A2PlusAm2;
  if (s == "MinusA2MinusAm2") return LoopFactor::MinusA2MinusAm2;
  if (s == "APlusAm1") return LoopFactor::APlusAm1;
  throw Error(ErrorCode::ParseError, "unknown loop factor '" + s + "'");
}

LaurentPoly loop_factor_poly(LoopFactor f) {
  switch (f) {
    case LoopFactor::One: return LaurentPoly::monomial(1, 0);
    case LoopFactor::A2PlusAm2: return LaurentPoly::from_terms({{2, 1}, {-2, 1}});
    case LoopFactor::MinusA2MinusAm2: return delta_poly();
    case LoopFactor::APlusAm1: return LaurentPoly::from_terms({{1, 1}, {-1, 1}});
  }
  return {};
}

std::string BracketConvention::str() const {
  return std::string("flip=") + (flip ? "true" : "false") + " offset=" + std::to_string(offset) +
         " mu=" + to_string(mu) + " unit=A^" + std::to_string(unit);
}

BracketConvention frozen_convention() { return {true, -1, LoopFactor::MinusA2MinusAm2, 0}; }

namespace {

// Arc ends of every crossing, and the two ways of joining them.
struct StateModel {
  int segments = 0;
  int crossings = 0;
  std::vector<std::uint8_t> at_infinity;
  // join[k][bit] = {{p, q}, {r, s}}: segment pairs merged when crossing k has that bit.
  std::vector<std::array<std::array<std::array<int, 2>, 2>, 2>> join;
};

StateModel build_model(const Diagram& d, bool flip) {
  StateModel m;
  m.crossings = static_cast<int>(d.crossings.size());
  // before[k][line side], after[k][line side] with side 0 = over, 1 = under.
  std::vector<std::array<int, 2>> before(d.crossings.size()), after(d.crossings.size());
  for (int i = 0; i < d.n; ++i) {
    const auto& ord = d.order[static_cast<std::size_t>(i)];
    const int cnt = std::max<int>(1, static_cast<int>(ord.size()));
    const int base = m.segments;
    m.segments += cnt;
    m.at_infinity.push_back(1);
    for (int q = 1; q < cnt; ++q) m.at_infinity.push_back(0);
    for (int q = 0; q < static_cast<int>(ord.size()); ++q) {
      const int k = ord[static_cast<std::size_t>(q)];
      const int side = d.crossings[static_cast<std::size_t>(k)].over == i ? 0 : 1;
      before[static_cast<std::size_t>(k)][static_cast<std::size_t>(side)] = base + q;
      after[static_cast<std::size_t>(k)][static_cast<std::size_t>(side)] = base + (q + 1) % cnt;
    }
  }
  m.join.resize(d.crossings.size());
  for (int k = 0; k < m.crossings; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const int ob = before[ku][0], oa = after[ku][0], ub = before[ku][1], ua = after[ku][1];
    const bool positive = d.crossings[ku].writhe_sign > 0;
    for (int bit = 0; bit < 2; ++bit) {
      bool smooth_a = (bit == 0) != flip;
      if (positive == smooth_a) {
        m.join[ku][static_cast<std::size_t>(bit)] = {{{oa, ub}, {ob, ua}}};
      } else {
        m.join[ku][static_cast<std::size_t>(bit)] = {{{oa, ua}, {ob, ub}}};
      }
    }
  }
  return m;
}

struct LocalCounts {
  int stride_c = 0;
  std::vector<std::int64_t> cells;  // [a_count][contractible][noncontractible]
  int max_nn = 0;
};

void run_states(const StateModel& m, std::uint64_t lo, std::uint64_t hi, LocalCounts& out) {
  const int s = m.segments;
  std::vector<std::uint8_t> parent(static_cast<std::size_t>(s));
  std::vector<std::uint8_t> parity(static_cast<std::size_t>(s));
  std::vector<std::uint8_t> is_root(static_cast<std::size_t>(s));
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[p];
      x = p;
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
  };
  for (std::uint64_t state = lo; state < hi; ++state) {
    std::iota(parent.begin(), parent.end(), std::uint8_t{0});
    for (int k = 0; k < m.crossings; ++k) {
      const auto& j = m.join[static_cast<std::size_t>(k)][(state >> k) & 1];
      unite(j[0][0], j[0][1]);
      unite(j[1][0], j[1][1]);
    }
    std::fill(parity.begin(), parity.end(), 0);
    std::fill(is_root.begin(), is_root.end(), 0);
    for (int x = 0; x < s; ++x) {
      const int r = find(x);
      is_root[static_cast<std::size_t>(r)] = 1;
      parity[static_cast<std::size_t>(r)] ^= m.at_infinity[static_cast<std::size_t>(x)];
    }
    int nc = 0, nn = 0;
    for (int x = 0; x < s; ++x) {
      if (!is_root[static_cast<std::size_t>(x)]) continue;
      (parity[static_cast<std::size_t>(x)] ? nn : nc)++;
    }
    const int a_count = m.crossings - std::popcount(state);
    out.max_nn = std::max(out.max_nn, nn);
    out.cells[static_cast<std::size_t>((a_count * out.stride_c + nc) * out.stride_c + nn)]++;
  }
}

}  // namespace

StateHistogram state_histogram(const Diagram& d, bool flip, int threads) {
  StateModel m = build_model(d, flip);
  if (m.segments > 255) throw Error(ErrorCode::TooLarge, "diagram too large for the state sum");
  if (m.crossings > 40) throw Error(ErrorCode::TooLarge, "too many crossings for the state sum");
  const std::uint64_t total = std::uint64_t{1} << m.crossings;
  const int stride = m.segments + 1;
  const std::size_t cells = static_cast<std::size_t>(m.crossings + 1) * stride * stride;

  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, total / 4096)));
  std::vector<LocalCounts> parts(workers);
  for (auto& p : parts) {
    p.stride_c = stride;
    p.cells.assign(cells, 0);
  }
  if (workers == 1) {
    run_states(m, 0, total, parts[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
      pool.emplace_back([&m, lo, hi, &part = parts[w]] { run_states(m, lo, hi, part); });
    }
  }

  StateHistogram h;
  h.crossings = m.crossings;
  h.total_states = static_cast<std::int64_t>(total);
  for (std::size_t i = 0; i < cells; ++i) {
    std::int64_t sum = 0;
    for (const auto& p : parts) sum += p.cells[i];
    if (sum == 0) continue;
    const int nn = static_cast<int>(i % static_cast<std::size_t>(stride));
    const int nc = static_cast<int>((i / static_cast<std::size_t>(stride)) % static_cast<std::size_t>(stride));
    const int a = static_cast<int>(i / (static_cast<std::size_t>(stride) * static_cast<std::size_t>(stride)));
    h.entries.push_back({a, nc, nn, sum});
  }
  for (const auto& p : parts) h.max_noncontractible = std::max(h.max_noncontractible, p.max_nn);
  return h;
}

LaurentPoly evaluate(const StateHistogram& h, const BracketConvention& conv) {
  const LaurentPoly delta = delta_poly();
  const LaurentPoly mu = loop_factor_poly(conv.mu);
  std::map<int, LaurentPoly> delta_pow, mu_pow;
  auto cached = [](std::map<int, LaurentPoly>& cache, const LaurentPoly& base, int e) -> const LaurentPoly& {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, base.pow(e)).first;
    return it->second;
  };
  LaurentPoly sum;
  for (const auto& e : h.entries) {
    LaurentPoly term = LaurentPoly::monomial(e.states, 2 * e.a_count - h.crossings);
    term = term * cached(delta_pow, delta, e.contractible) * cached(mu_pow, mu, e.noncontractible);
    sum += term;
  }
  for (int i = 0; i < conv.offset; ++i) sum = sum * delta;
  for (int i = 0; i > conv.offset; --i) sum = sum.divided_by(delta);
  return sum.shifted(conv.unit);
}

LaurentPoly state_sum(const Diagram& d, const BracketConvention& conv, int threads) {
  return evaluate(state_histogram(d, conv.flip, threads), conv);
}

LaurentPoly drobotukhina(const Configuration& c, const Vec3& dir, const BracketConvention& conv, int threads) {
  if (c.size() < 1) throw Error(ErrorCode::TooFewLines, "bracket needs at least one line");
  return state_sum(project(c, dir), conv, threads);
}

LaurentPoly drobotukhina(const Configuration& c, const BracketConvention& conv, int threads) {
  if (c.size() < 1) throw Error(ErrorCode::TooFewLines, "bracket needs at least one line");
  return drobotukhina(c, find_generic_direction(c), conv, threads);
}

Calibration calibrate(const Configuration& reference, const LaurentPoly& target, int threads) {
  const Diagram d = project(reference, find_generic_direction(reference));
  Calibration cal;
  struct Near {
    std::int64_t distance;
    BracketConvention conv;
  };
  std::vector<Near> nearest;
  for (bool flip : {false, true}) {
    const StateHistogram h = state_histogram(d, flip, threads);
    for (int offset : {0, -1}) {
      for (auto mu : {LoopFactor::One, LoopFactor::A2PlusAm2, LoopFactor::MinusA2MinusAm2, LoopFactor::APlusAm1}) {
        LaurentPoly base;
        try {
          base = evaluate(h, {flip, offset, mu, 0});
        } catch (const Error& e) {
          if (e.code() != ErrorCode::InexactDivision) throw;
          continue;
        }
        for (int unit = -6; unit <= 6; ++unit) {
          BracketConvention conv{flip, offset, mu, unit};
          LaurentPoly diff = base.shifted(unit) - target;
          if (diff.is_zero()) {
            cal.matches.push_back(conv);
            continue;
          }
          std::int64_t dist = 0;
          for (auto [e, c] : diff.terms()) dist += c < 0 ? -c : c;
          nearest.push_back({dist, conv});
        }
      }
    }
  }
  if (cal.matches.empty()) {
    std::sort(nearest.begin(), nearest.end(), [](const Near& a, const Near& b) { return a.distance < b.distance; });
    std::string msg = "no convention reproduces " + target.str() + "; nearest:";
    for (std::size_t i = 0; i < std::min<std::size_t>(3, nearest.size()); ++i) {
      msg += " [" + nearest[i].conv.str() + ", L1 distance " + std::to_string(nearest[i].distance) + "]";
    }
    throw Error(ErrorCode::NoMatch, msg);
  }
  const auto& m0 = cal.matches.front();
  bool only_mu_differs = std::all_of(cal.matches.begin(), cal.matches.end(), [&](const BracketConvention& c) {
    return c.flip == m0.flip && c.offset == m0.offset && c.unit == m0.unit;
  });
  if (!only_mu_differs) {
    std::string msg = "several conventions reproduce the target:";
    for (const auto& c : cal.matches) msg += " [" + c.str() + "]";
    throw Error(ErrorCode::Ambiguous, msg);
  }
  cal.chosen = m0;
  for (const auto& c : cal.matches) {
    if (c.mu == LoopFactor::MinusA2MinusAm2) cal.chosen = c;
  }
  return cal;
}

}  // namespace skewlines
