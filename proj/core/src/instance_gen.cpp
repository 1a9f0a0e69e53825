#include "hamdec/instance_gen.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "hamdec/errors.hpp"

namespace hamdec {

std::string_view to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::RandomPermutation:
      return "permutation";
    case InstanceKind::Pyramidal:
      return "pyramidal";
    case InstanceKind::FourPeak:
      return "four-peak";
  }
  return "unknown";
}

std::optional<InstanceKind> parse_instance_kind(std::string_view text) {
  if (text == "permutation" || text == "random") {
    return InstanceKind::RandomPermutation;
  }
  if (text == "pyramidal") return InstanceKind::Pyramidal;
  if (text == "four-peak" || text == "fourpeak") return InstanceKind::FourPeak;
  return std::nullopt;
}

namespace {

void require_size(int n, int minimum, std::string_view family) {
  if (n < minimum) {
    throw InputError(std::string(family) + " cycles need n >= " +
                     std::to_string(minimum) + ", got " + std::to_string(n));
  }
}

}  // namespace

HamCycle random_permutation_cycle(int n, Rng& rng, bool directed) {
  require_size(n, 3, "random permutation");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{1});
  rng.shuffle(std::span<Vertex>(order).subspan(1));
  return HamCycle(std::move(order), directed);
}

HamCycle pyramidal_tour_from_runs(int n, const std::vector<bool>& ascending,
                                  bool directed) {
  require_size(n, 3, "pyramidal");
  std::vector<Vertex> order{1};
  order.reserve(n);
  for (Vertex v = 2; v < n; ++v) {
    if (ascending[v]) order.push_back(v);
  }
  order.push_back(n);
  for (Vertex v = n - 1; v >= 2; --v) {
    if (!ascending[v]) order.push_back(v);
  }
  return HamCycle(std::move(order), directed);
}

HamCycle pyramidal_tour(int n, Rng& rng, bool directed) {
  require_size(n, 3, "pyramidal");
  std::vector<bool> ascending(n + 1, false);
  for (Vertex v = 2; v < n; ++v) ascending[v] = rng.coin();
  return pyramidal_tour_from_runs(n, ascending, directed);
}

HamCycle four_peak_cycle(int n, Rng& rng, bool directed) {
  require_size(n, 8, "four-peak");
  constexpr int kPeaks = 4;
  constexpr int kMaxDraws = 100000;

  for (int draw = 0; draw < kMaxDraws; ++draw) {
    // Every vertex joins one of four groups; each group becomes a pyramidal
    // segment (ascending to its maximum, then descending) and the segments
    // are laid end to end. Segment maxima are the peaks unless a group is
    // empty or a boundary adds one, which the peak count below rejects.
    std::array<std::vector<Vertex>, kPeaks> groups;
    for (Vertex v = 1; v <= n; ++v) groups[rng.below(kPeaks)].push_back(v);

    std::vector<Vertex> order;
    order.reserve(n);
    for (auto& group : groups) {
      if (group.empty()) continue;
      std::vector<Vertex> down;
      for (std::size_t i = 0; i + 1 < group.size(); ++i) {
        if (rng.coin()) {
          order.push_back(group[i]);
        } else {
          down.push_back(group[i]);
        }
      }
      order.push_back(group.back());
      order.insert(order.end(), down.rbegin(), down.rend());
    }
    HamCycle cycle = HamCycle::canonical(std::move(order), directed);
    if (peaks(cycle).size() == kPeaks) return cycle;
  }
  throw InputError("could not draw a four-peak cycle for n = " +
                   std::to_string(n));
}

Instance generate_instance(const InstanceSpec& spec) {
  auto draw = [&spec](std::uint64_t stream) {
    Rng rng(mix_seed(spec.seed, stream));
    switch (spec.kind) {
      case InstanceKind::Pyramidal:
        return pyramidal_tour(spec.n, rng, spec.directed);
      case InstanceKind::FourPeak:
        return four_peak_cycle(spec.n, rng, spec.directed);
      case InstanceKind::RandomPermutation:
        break;
    }
    return random_permutation_cycle(spec.n, rng, spec.directed);
  };
  HamCycle x = draw(0);
  HamCycle y = draw(1);
  UnionMultigraph g = build_union(x, y);
  return Instance{std::move(x), std::move(y), std::move(g)};
}

}  // namespace hamdec
