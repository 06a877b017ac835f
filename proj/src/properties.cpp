#include "rhp/properties.hpp"

#include <set>

#include "rhp/errors.hpp"
#include "rhp/tuple_io.hpp"

namespace rhp {

namespace {

// Records the first failure; later ones are ignored.
void fail(CheckResult& r, const std::string& what, const ForestTuple& t) {
  if (!r.passed) return;
  r.passed = false;
  r.detail = what + " at " + brief(t);
}

template <typename Body>
void guarded(CheckResult& r, const ForestTuple& t, Body body) {
  try {
    body();
  } catch (const Error& e) {
    fail(r, e.what(), t);
  }
}

CheckResult check_toggle(const std::string& name, int n, int k, SetName big, SetName fixed,
                         ForestTuple (*phi)(const ForestTuple&), std::uint64_t cap) {
  CheckResult r{name, true, 0, {}};
  for_each_in_set(n, k, big, [&](const ForestTuple& t) {
    if (!r.passed) return;
    ++r.checked;
    guarded(r, t, [&] {
      const ForestTuple image = phi(t);
      if (is_in(t, fixed)) {
        if (image != t) fail(r, "moved an element of " + to_string(fixed), t);
        return;
      }
      if (!is_in(image, big)) fail(r, "left " + to_string(big), t);
      if (is_in(image, fixed)) fail(r, "landed in " + to_string(fixed), t);
      if (sign_of(image) != -sign_of(t)) fail(r, "sign not reversed", t);
      if (weight_multiset(image) != weight_multiset(t)) fail(r, "weight changed", t);
      if (phi(image) != t) fail(r, "not an involution", t);
    });
  }, cap);
  return r;
}

}  // namespace

CheckResult check_phi0(int n, int k, std::uint64_t cap) {
  return check_toggle("phi0", n, k, SetName::S1, SetName::S0, [](const ForestTuple& t) { return phi0(t); },
                      cap);
}

CheckResult check_phi2(int n, int k, std::uint64_t cap) {
  return check_toggle("phi2", n, k, SetName::S2, SetName::S3, [](const ForestTuple& t) { return phi2(t); },
                      cap);
}

CheckResult check_phi1(int n, int k, std::uint64_t cap) {
  CheckResult r{"phi1", true, 0, {}};
  // sign of an element of the difference S1 - S2
  auto difference_sign = [](const ForestTuple& t) { return has_s1_shape(t) ? sign_of(t) : -sign_of(t); };
  auto visit = [&](const ForestTuple& t) {
    if (!r.passed) return;
    ++r.checked;
    guarded(r, t, [&] {
      TraceLog trace;
      trace.initial = t;
      const ForestTuple image = phi1(t, &trace);
      if (t.k == 1) {
        if (image != t) fail(r, "k = 1 must be the identity", t);
        return;
      }
      if (!is_in(image, SetName::S1) && !is_in(image, SetName::S2)) fail(r, "image outside S1 and S2", t);
      if (difference_sign(image) != -difference_sign(t)) fail(r, "sign not reversed", t);
      if (weight_multiset(image) != weight_multiset(t)) fail(r, "weight changed", t);
      if (phi1(image) != t) fail(r, "not an involution", t);

      ForestTuple prev = t;
      for (const auto& step : trace.steps) {
        ForestTuple replayed = prev;
        replay_step(replayed, step);
        if (replayed != step.snapshot) fail(r, "trace replay mismatch", t);
        const bool same_parity = red_cycle_count(step.snapshot) % 2 == red_cycle_count(prev) % 2;
        if (same_parity != step.ended_in_a) fail(r, "red cycle parity does not match the terminal side", t);
        std::set<int> touched;
        for (const auto& m : step.edge_moves) {
          touched.insert(m.from_graph);
          touched.insert(m.to_graph);
        }
        if (touched.size() > 2 || (!touched.empty() && !touched.count(0))) {
          fail(r, "pairwise step touched graphs outside its pair", t);
        }
        for (NodeId v = 0; v <= t.n; ++v) {
          int before = 0, after = 0;
          for (int g : touched) {
            before += prev.graphs[static_cast<std::size_t>(g)].has_out(v);
            after += step.snapshot.graphs[static_cast<std::size_t>(g)].has_out(v);
          }
          if (before != after) fail(r, "pairwise step changed the out-node multiset", t);
        }
        prev = step.snapshot;
      }
    });
  };
  for_each_in_set(n, k, SetName::S1, visit, cap);
  for_each_in_set(n, k, SetName::S2, visit, cap);
  return r;
}

CheckResult check_bijection(int n, int k, const DriverOptions& options, std::uint64_t cap) {
  CheckResult r{"bijection", true, 0, {}};
  std::set<ForestTuple> images;
  for_each_in_set(n, k, SetName::S0, [&](const ForestTuple& t) {
    if (!r.passed) return;
    ++r.checked;
    guarded(r, t, [&] {
      const auto fwd = garsia_milne_forward(t, options).first;
      if (!is_in(fwd, SetName::S3)) fail(r, "image not in S3", t);
      if (weight_multiset(fwd) != weight_multiset(t)) fail(r, "weight changed", t);
      if (!images.insert(fwd).second) fail(r, "two elements share an image", t);
      if (garsia_milne_backward(fwd, options).first != t) fail(r, "backward does not invert forward", t);
    });
  }, cap);
  if (r.passed) {
    std::uint64_t s3 = 0;
    for_each_in_set(n, k, SetName::S3, [&](const ForestTuple&) { ++s3; }, cap);
    if (s3 != images.size()) {
      r.passed = false;
      r.detail = "|S3| = " + std::to_string(s3) + " but " + std::to_string(images.size()) + " images";
    }
  }
  return r;
}

std::vector<CheckResult> involution_suite(int n, int k, std::uint64_t cap) {
  return {check_phi0(n, k, cap), check_phi1(n, k, cap), check_phi2(n, k, cap)};
}

}  // namespace rhp
