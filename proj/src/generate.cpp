#include "graphgame/generate.hpp"

#include <algorithm>
#include <random>

#include "graphgame/error.hpp"

namespace gg {

GraphicalGame generate_random_game(std::size_t n, std::size_t d, std::uint64_t seed,
                                   const GameGenOptions& options) {
  if (options.max_denominator < 1) {
    fail(ErrorKind::kInvalidArgument, "max_denominator must be positive");
  }
  if (d > 20) fail(ErrorKind::kLimitExceeded, "dense games are limited to in-degree 20");
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t bound) { return rng() % bound; };
  const std::size_t cap = n == 0 ? 0 : std::min(d, n - 1);

  std::vector<std::vector<PlayerId>> in(n);
  std::vector<PayoffTensor> tensors;
  tensors.reserve(n);
  for (PlayerId i = 0; i < n; ++i) {
    const std::size_t degree =
        i == 0 || options.full_degree ? cap : static_cast<std::size_t>(draw(cap + 1));
    std::vector<PlayerId> others;
    for (PlayerId j = 0; j < n; ++j) {
      if (j != i) others.push_back(j);
    }
    for (std::size_t s = 0; s < degree; ++s) {
      const std::size_t pick = s + static_cast<std::size_t>(draw(others.size() - s));
      std::swap(others[s], others[pick]);
      in[i].push_back(others[s]);
    }
    DenseTensor t;
    t.arity = degree;
    t.table.reserve(std::size_t{2} << degree);
    for (std::size_t e = 0; e < (std::size_t{2} << degree); ++e) {
      if (options.win_lose) {
        t.table.emplace_back(static_cast<long>(draw(2)));
      } else {
        const long den = 1 + static_cast<long>(draw(options.max_denominator));
        const long num = static_cast<long>(draw(den + 1));
        t.table.emplace_back(num, den);
      }
    }
    tensors.emplace_back(std::move(t));
  }
  return GraphicalGame(std::move(in), std::move(tensors), options.win_lose);
}

}  // namespace gg
