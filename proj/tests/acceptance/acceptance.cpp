// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/oracle.hpp"
#include "zforce/zforce.hpp"

using namespace zforce;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

SolverOptions wide() {
  SolverOptions opt;
  opt.max_vertices = 64;
  return opt;
}

std::optional<std::size_t> exact_f(const Digraph& d) {
  auto f = failed_zero_forcing_number(d, wide());
  return f ? std::optional<std::size_t>(f->value) : std::nullopt;
}

std::string counted(std::uint64_t checked, std::uint64_t bad, const char* unit) {
  return std::to_string(checked) + " " + unit + ", " + std::to_string(bad) + " mismatches";
}

// 1. directed cycles, n = 3..12
Outcome directed_cycles() {
  Outcome o;
  auto t0 = Clock::now();
  for (std::size_t n = 3; n <= 12; ++n) {
    Digraph c = directed_cycle(n);
    auto closed = auto_failed_zero_forcing(c);
    bool ok = exact_f(c) == 0u && closed.value == 0u && closed.method == Method::ClosedForm &&
              f_weak_cycle(c) == 0u && zero_forcing_number(c).value == 1u;
    if (!ok) {
      o.pass = false;
      o.detail = "n=" + std::to_string(n);
      return o;
    }
  }
  double s = seconds_since(t0);
  o.pass = s < 1.0;
  o.detail = "10 cycles in " + std::to_string(s) + " s (limit 1 s)";
  return o;
}

// 2. bidirected paths, n = 2..10
Outcome bidirected_paths() {
  Outcome o;
  for (std::size_t n = 2; n <= 10; ++n) {
    Digraph p = bidirected_path(n);
    std::size_t expect = (n - 2 + 1) / 2;
    if (exact_f(p) != expect || oracle::F(p) != expect) {
      o.pass = false;
      o.detail = "n=" + std::to_string(n);
      return o;
    }
  }
  o.detail = "9 paths exact";
  return o;
}

// 3. every weak path orientation, n <= 7
Outcome weak_paths() {
  std::uint64_t checked = 0, bad = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for_each_orientation(n - 1, [&](const OrientationSpec& spec) {
      Digraph d = weak_path(spec);
      ++checked;
      if (f_weak_path(d) != exact_f(d)) ++bad;
    });
  return {bad == 0, counted(checked, bad, "paths")};
}

// 4. every weak cycle orientation with a one-way arc, n <= 6; bidirected C_5 by solver
Outcome weak_cycles() {
  std::uint64_t checked = 0, bad = 0;
  for (std::size_t n = 3; n <= 6; ++n)
    for_each_orientation(n, [&](const OrientationSpec& spec) {
      bool one_way = false;
      for (auto o : spec) one_way = one_way || o != Orientation::Both;
      if (!one_way) return;
      Digraph d = weak_cycle(spec);
      ++checked;
      if (f_weak_cycle(d) != exact_f(d)) ++bad;
    });
  Digraph c5 = bidirected_cycle(5);
  auto f5 = exact_f(c5);
  bool c5_ok = f5 == 2u && oracle::F(c5) == 2u;
  return {bad == 0 && c5_ok,
          counted(checked, bad, "cycles") + "; F(bidirected C_5) = " + (f5 ? std::to_string(*f5) : "null")};
}

// 5. construction realises every k
Outcome construction() {
  std::uint64_t checked = 0, bad = 0;
  for (std::size_t n = 3; n <= 10; ++n)
    for (std::size_t k = 0; k < n; ++k) {
      ++checked;
      if (exact_f(construct_weak_cycle(n, k)) != k) ++bad;
    }
  return {bad == 0, counted(checked, bad, "(n, k) pairs")};
}

bool f_less_than_z(const Digraph& d) { return *exact_f(d) < zero_forcing_number(d).value; }

// 6. classifier censuses
Outcome census() {
  auto t0 = Clock::now();
  std::uint64_t checked4 = 0, bad4 = 0;
  for_each_digraph(4, [&](const Digraph& d) {
    ++checked4;
    if ((classify_f_less_than_z(d).kind != ClassKind::None) != f_less_than_z(d)) ++bad4;
  });
  double s4 = seconds_since(t0);
  std::uint64_t checked5 = 0, bad5 = 0;
  for_each_oriented_graph(5, [&](const Digraph& d) {
    ++checked5;
    if ((classify_oriented(d) != ClassKind::None) != f_less_than_z(d)) ++bad5;
  });
  bool pass = bad4 == 0 && checked4 == 4096 && s4 < 60.0 && bad5 == 0 && checked5 == 59049;
  return {pass, counted(checked4, bad4, "digraphs") + " in " + std::to_string(s4) + " s; " +
                    counted(checked5, bad5, "oriented graphs")};
}

// 7. K_5 outjoined to two isolated vertices
Outcome complete_outjoin() {
  Digraph d = outjoin(complete_digraph(5), empty_digraph(2));
  auto f = exact_f(d);
  auto z = zero_forcing_number(d).value;
  return {f == 5u && z == 6u, "F = " + (f ? std::to_string(*f) : "null") + ", Z = " + std::to_string(z)};
}

// 8. line digraphs, n <= 4, plus B(2,3) and K(2,3)
Outcome line_digraphs() {
  std::uint64_t checked = 0, bad = 0;
  for (std::size_t n = 2; n <= 4; ++n)
    for_each_digraph(n, [&](const Digraph& d) {
      if (!is_weakly_connected(d)) return;
      ++checked;
      if (f_line_digraph(d) != exact_f(line_digraph(d).graph)) ++bad;
    });
  Digraph b23 = de_bruijn(2, 3), k23 = kautz(2, 3);
  bool named = exact_f(b23) == b23.order() - 2 && exact_f(b23) == 6u && f_line_digraph(de_bruijn(2, 2)) == 6u &&
               exact_f(k23) == k23.order() - 2 && exact_f(k23) == 10u && f_line_digraph(kautz(2, 2)) == 10u &&
               b23.has_loops() && zero_forcing_number(b23).value > 0;
  return {bad == 0 && named, counted(checked, bad, "bases") + "; F(B(2,3)) = " + std::to_string(*exact_f(b23)) +
                                 ", F(K(2,3)) = " + std::to_string(*exact_f(k23))};
}

// 9. critical / stalled duality and the F+1 property, exhaustive n <= 5
Outcome duality() {
  std::uint64_t checked = 0, bad = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_digraph(n, [&](const Digraph& d) {
      ++checked;
      const Mask full = full_mask(n);
      bool ok = true;
      std::size_t min_crit = n;
      for (Mask w = 1; w <= full; ++w) {
        bool crit = is_critical(d, w);
        if (crit != is_stalled(d, full & ~w)) ok = false;
        if (crit) min_crit = std::min<std::size_t>(min_crit, static_cast<std::size_t>(std::popcount(w)));
      }
      auto f = exact_f(d);
      if (!f || *f != n - min_crit) ok = false;
      // every set of size F+1 forces (all of them: at most C(5,2) = 10 per digraph)
      if (f && *f + 1 <= n)
        for (Mask s = 0; s <= full; ++s)
          if (static_cast<std::size_t>(std::popcount(s)) == *f + 1 && !is_zfs(d, s)) ok = false;
      if (!ok) ++bad;
    });
  return {bad == 0, counted(checked, bad, "digraphs")};
}

// 10. kernel support for every zero forcing set
Outcome kernel() {
  auto t0 = Clock::now();
  auto r = sweep_kernel(50, 20, 2024);
  double s = seconds_since(t0);
  return {r.ok() && s < 60.0, counted(r.checked, r.mismatches, "(set, matrix) checks") + " in " + std::to_string(s) +
                                  " s"};
}

// 11. extremal predicates against solver values, n <= 5
Outcome extremal() {
  std::uint64_t checked = 0, bad = 0;
  std::uint64_t hits[3] = {0, 0, 0};
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_digraph(n, [&](const Digraph& d) {
      ++checked;
      const std::size_t f = *exact_f(d);
      auto flags = extremal_predicates(d);
      hits[0] += flags.f_is_n_minus_1;
      hits[1] += flags.f_is_n_minus_2;
      hits[2] += flags.f_is_n_minus_3;
      if (flags.f_is_n_minus_1 != (f + 1 == n) || flags.f_is_n_minus_2 != (f + 2 == n) ||
          flags.f_is_n_minus_3 != (f + 3 == n))
        ++bad;
    });
  return {bad == 0, counted(checked, bad, "digraphs") + " (n-1: " + std::to_string(hits[0]) +
                        ", n-2: " + std::to_string(hits[1]) + ", n-3: " + std::to_string(hits[2]) + ")"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"directed cycles: F = 0, Z = 1 for n = 3..12", directed_cycles},
      {"bidirected paths: F = ceil((n-2)/2) for n = 2..10", bidirected_paths},
      {"weak path closed form vs solver, n <= 7", weak_paths},
      {"weak cycle closed forms vs solver, n <= 6", weak_cycles},
      {"weak cycle construction realises every k, n = 3..10", construction},
      {"F < Z classifiers: 4-vertex and oriented 5-vertex censuses", census},
      {"K_5 outjoined to 2 isolated vertices: F = 5, Z = 6", complete_outjoin},
      {"line digraph formula, de Bruijn and Kautz values", line_digraphs},
      {"critical/stalled duality and F+1 sets, n <= 5", duality},
      {"kernel support of zero forcing sets, exact rationals", kernel},
      {"extremal predicates vs solver, n <= 5", extremal},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %2d  %s  (%s; %.2f s)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(),
                seconds_since(t0));
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
