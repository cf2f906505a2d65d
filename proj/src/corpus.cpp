#include "extlab/corpus.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace extlab {

Measure disconnected_counterexample(int alphabet, const std::vector<Rational>& rho) {
  if (static_cast<int>(rho.size()) != alphabet) throw std::invalid_argument("rho must have one entry per symbol");
  Rational sum = 0;
  for (const auto& r : rho) {
    if (sgn(r) < 0) throw std::invalid_argument("rho has a negative entry");
    sum += r;
  }
  if (sum != 1) throw std::invalid_argument("rho does not sum to 1");
  Domain u(1, {LatticePoint{0}, LatticePoint{1}, LatticePoint{3}});
  std::vector<Rational> m(checked_word_count(3, alphabet));
  for (int a = 0; a < alphabet; ++a)
    for (int c = 0; c < alphabet; ++c) m[word_index({a, a, c}, alphabet)] = rho[a] * rho[c];
  return Measure(u, alphabet, std::move(m));
}

Measure pseudolattice_measure() {
  // {top-left, top-right, bottom-left, bottom-right}
  static const int tiles[18][4] = {
      {9, 1, 10, 0},   {1, 4, 0, 0},    {4, 9, 0, 10},  {10, 0, 11, 7}, {0, 0, 6, 6},   {0, 10, 7, 11},
      {11, 7, 9, 1},   {7, 7, 1, 4},    {7, 11, 4, 9},  {13, 12, 14, 2}, {12, 5, 2, 2},  {5, 13, 2, 14},
      {14, 2, 15, 6},  {2, 2, 7, 7},    {2, 14, 6, 15}, {15, 6, 13, 12}, {6, 6, 12, 5},  {6, 15, 5, 13},
  };
  Domain u = Domain::box({0, 0}, {1, 1});  // order (0,0) (0,1) (1,0) (1,1)
  std::vector<Symbols> words;
  for (const auto& t : tiles) words.push_back({t[2], t[0], t[3], t[1]});
  return Measure::uniform_on(u, 16, words);
}

std::string robinson_letters(RobinsonReading reading) {
  return reading == RobinsonReading::DistinctLetter ? "0aAbBcCd" : "0aAbBcC";
}

std::vector<LetterTile> robinson_base_tiles(RobinsonReading reading) {
  const char d = reading == RobinsonReading::DistinctLetter ? 'd' : 'C';
  return {
      LetterTile{{{'A', 'C', 'A'}, {'B', '0', d}, {'A', 'B', 'A'}}},
      LetterTile{{{'a', 'c', 'a'}, {'c', '0', 'c'}, {'a', 'C', 'a'}}},
      LetterTile{{{'a', 'b', 'a'}, {'c', '0', 'c'}, {'a', 'B', 'a'}}},
      LetterTile{{{'a', 'C', 'a'}, {'B', '0', 'C'}, {'a', 'B', 'a'}}},
      LetterTile{{{'a', 'b', 'a'}, {'c', '0', 'c'}, {'a', 'b', 'a'}}},
      LetterTile{{{'a', 'b', 'a'}, {'b', '0', 'b'}, {'a', 'B', 'a'}}},
  };
}

namespace {

LetterTile quarter_turn(const LetterTile& t) {
  LetterTile r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[j][2 - i] = t[i][j];
  return r;
}

bool edges_match(char x, char y) {
  return (x == 'b' && y == 'B') || (x == 'B' && y == 'b') || (x == 'c' && y == 'C') || (x == 'C' && y == 'c');
}

int letter_code(char ch, const std::string& letters) {
  auto pos = letters.find(ch);
  if (pos == std::string::npos) throw std::invalid_argument(std::string("letter outside the alphabet: ") + ch);
  return static_cast<int>(pos);
}

}  // namespace

std::vector<LetterTile> robinson_oriented_tiles(RobinsonReading reading) {
  std::vector<LetterTile> out;
  for (auto t : robinson_base_tiles(reading))
    for (int r = 0; r < 4; ++r, t = quarter_turn(t))
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  return out;
}

bool robinson_side_by_side_ok(const LetterTile& left, const LetterTile& right) {
  return edges_match(left[1][2], right[1][0]);
}

bool robinson_stacked_ok(const LetterTile& top, const LetterTile& bottom) {
  return edges_match(top[2][1], bottom[0][1]);
}

bool robinson_corner_ok(const LetterTile& tl, const LetterTile& tr, const LetterTile& bl, const LetterTile& br) {
  const char c[4] = {tl[2][2], tr[2][0], bl[0][2], br[0][0]};
  return std::count(c, c + 4, 'a') == 3 && std::count(c, c + 4, 'A') == 1;
}

Symbols robinson_render(const std::vector<std::vector<LetterTile>>& tiles, RobinsonReading reading) {
  const std::string letters = robinson_letters(reading);
  const std::size_t rows = tiles.size(), cols = rows ? tiles[0].size() : 0;
  const std::size_t h = 3 * rows, w = 3 * cols;
  // Box [1..w] x [1..h] in lexicographic order: x major, y minor.
  Symbols out(w * h);
  for (std::size_t x = 0; x < w; ++x)
    for (std::size_t y = 0; y < h; ++y) {
      const std::size_t r = h - 1 - y;  // letter row from the top
      out[x * h + y] = letter_code(tiles.at(r / 3).at(x / 3)[r % 3][x % 3], letters);
    }
  return out;
}

WordSet robinson_tileset(RobinsonReading reading) {
  const auto tiles = robinson_oriented_tiles(reading);
  const std::size_t n = tiles.size();
  std::set<Symbols> windows;
  for (std::size_t tl = 0; tl < n; ++tl)
    for (std::size_t tr = 0; tr < n; ++tr) {
      if (!robinson_side_by_side_ok(tiles[tl], tiles[tr])) continue;
      for (std::size_t bl = 0; bl < n; ++bl) {
        if (!robinson_stacked_ok(tiles[tl], tiles[bl])) continue;
        for (std::size_t br = 0; br < n; ++br) {
          if (!robinson_side_by_side_ok(tiles[bl], tiles[br]) || !robinson_stacked_ok(tiles[tr], tiles[br]) ||
              !robinson_corner_ok(tiles[tl], tiles[tr], tiles[bl], tiles[br]))
            continue;
          Symbols block = robinson_render({{tiles[tl], tiles[tr]}, {tiles[bl], tiles[br]}}, reading);
          // block is 6x6 on [1..6]^2; take every 3x3 window.
          for (std::size_t ox = 0; ox <= 3; ++ox)
            for (std::size_t oy = 0; oy <= 3; ++oy) {
              Symbols w;
              for (std::size_t x = 0; x < 3; ++x)
                for (std::size_t y = 0; y < 3; ++y) w.push_back(block[(ox + x) * 6 + (oy + y)]);
              windows.insert(std::move(w));
            }
        }
      }
    }
  return WordSet(Domain::box({1, 1}, {3, 3}), static_cast<int>(robinson_letters(reading).size()),
                 std::vector<Symbols>(windows.begin(), windows.end()));
}

WordSet binary_counter_words(int k) {
  if (k < 1 || k > 20) throw std::invalid_argument("binary counter: bits must lie in [1, 20]");
  const std::size_t width = static_cast<std::size_t>(k) + 1;
  const unsigned long long period = 1ULL << k;
  std::vector<Symbols> words;
  for (unsigned long long w0 = 0; w0 < period; ++w0) {
    const unsigned long long w1 = (w0 + 1) % period;
    std::vector<int> bottom(width, 0), top(width, 0);
    for (int j = 0; j < k; ++j) {
      bottom[static_cast<std::size_t>(j)] = static_cast<int>((w0 >> (k - 1 - j)) & 1ULL);
      top[static_cast<std::size_t>(j)] = static_cast<int>((w1 >> (k - 1 - j)) & 1ULL);
    }
    for (std::size_t r = 0; r < width; ++r) {
      Symbols w;  // points (x, 0), (x, 1) for x = 1..k+1
      for (std::size_t x = 0; x < width; ++x) {
        w.push_back(bottom[(x + r) % width]);
        w.push_back(top[(x + r) % width]);
      }
      words.push_back(std::move(w));
    }
  }
  return WordSet(Domain::box({1, 0}, {static_cast<Coord>(width), 1}), 2, std::move(words));
}

Measure binary_counter_measure(int k) {
  WordSet w = binary_counter_words(k);
  return Measure::uniform_on(w.domain, 2, w.words);
}

WordSet ca_to_sft(const std::vector<int>& rule, const Domain& u, int alphabet) {
  const std::size_t n = checked_word_count(u.size(), alphabet);
  if (rule.size() != n) throw std::invalid_argument("rule table must have one entry per word on the neighbourhood");
  const std::size_t d = u.dim();
  std::vector<LatticePoint> pts;
  for (const auto& p : u) {
    std::vector<Coord> c = p.coords();
    c.push_back(0);
    pts.emplace_back(std::move(c));
  }
  LatticePoint apex = LatticePoint::zero(d + 1);
  apex[d] = 1;
  pts.push_back(apex);
  Domain lifted(d + 1, pts);
  const std::size_t apex_pos = *lifted.index_of(apex);
  std::vector<std::size_t> base_pos;
  for (const auto& p : u) {
    std::vector<Coord> c = p.coords();
    c.push_back(0);
    base_pos.push_back(*lifted.index_of(LatticePoint(std::move(c))));
  }
  std::vector<Symbols> words;
  for (std::size_t i = 0; i < n; ++i) {
    if (rule[i] < 0 || rule[i] >= alphabet) throw std::invalid_argument("rule output outside the alphabet");
    Symbols below = word_at(i, u.size(), alphabet);
    Symbols w(lifted.size());
    for (std::size_t j = 0; j < below.size(); ++j) w[base_pos[j]] = below[j];
    w[apex_pos] = rule[i];
    words.push_back(std::move(w));
  }
  return WordSet(std::move(lifted), alphabet, std::move(words));
}

std::vector<int> elementary_rule(int number) {
  if (number < 0 || number > 255) throw std::invalid_argument("elementary rule number must lie in [0, 255]");
  std::vector<int> t(8);
  for (int i = 0; i < 8; ++i) t[static_cast<std::size_t>(i)] = (number >> i) & 1;
  return t;
}

}  // namespace extlab
