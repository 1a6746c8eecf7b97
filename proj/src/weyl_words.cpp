#include "kostant/weyl_words.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "kostant/kostant_game.hpp"

namespace kostant {

namespace {

bool is_positive(const IntVec& v) {
  bool any = false;
  for (int x : v) {
    if (x < 0) return false;
    any = any || x > 0;
  }
  return any;
}

// s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}) for k = 1..t.
std::vector<IntVec> inversion_roots(const CartanData& d, const Word& letters) {
  std::vector<IntVec> out;
  out.reserve(letters.size());
  for (std::size_t k = 0; k < letters.size(); ++k) {
    IntVec v(d.n, 0);
    v[letters[k]] = 1;
    for (std::size_t l = k; l-- > 0;) v = reflect(d, letters[l], v);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::optional<std::vector<IntVec>> inversions(const CartanData& d, const Word& letters) {
  auto roots = inversion_roots(d, letters);
  RootSet seen;
  for (const auto& r : roots)
    if (!is_positive(r) || !seen.insert(r).second) return std::nullopt;
  return roots;
}

bool is_reduced(const CartanData& d, const Word& letters) {
  return inversions(d, letters).has_value();
}

ElementKey identity_key(const CartanData& d) {
  ElementKey key(static_cast<std::size_t>(d.n) * d.n, 0);
  for (int i = 0; i < d.n; ++i) key[static_cast<std::size_t>(i) * d.n + i] = 1;
  return key;
}

namespace {

ElementKey left_multiply(const CartanData& d, int i, const ElementKey& key) {
  ElementKey out(key.size());
  for (int c = 0; c < d.n; ++c) {
    IntVec img(key.begin() + static_cast<std::size_t>(c) * d.n,
               key.begin() + static_cast<std::size_t>(c + 1) * d.n);
    img = reflect(d, i, std::move(img));
    std::copy(img.begin(), img.end(), out.begin() + static_cast<std::size_t>(c) * d.n);
  }
  return out;
}

// Column c of the key is the image of alpha_c.
bool image_positive(const CartanData& d, const ElementKey& key, int c) {
  IntVec img(key.begin() + static_cast<std::size_t>(c) * d.n,
             key.begin() + static_cast<std::size_t>(c + 1) * d.n);
  return is_positive(img);
}

}  // namespace

ElementKey apply_word_key(const CartanData& d, const Word& letters) {
  ElementKey key = identity_key(d);
  for (int i : letters) key = left_multiply(d, i, key);
  return key;
}

std::size_t group_order(const CartanData& d, const std::vector<int>& generators) {
  std::vector<int> gens = generators;
  if (gens.empty())
    for (int i = 0; i < d.n; ++i) gens.push_back(i);
  std::unordered_set<ElementKey, IntVecHash> seen;
  std::vector<ElementKey> queue{identity_key(d)};
  seen.insert(queue[0]);
  for (std::size_t at = 0; at < queue.size(); ++at)
    for (int i : gens) {
      ElementKey next = left_multiply(d, i, queue[at]);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  return seen.size();
}

CosetFamily coset_reps(const CartanData& d, int j) {
  CosetFamily fam;
  fam.excluded = j;
  std::unordered_map<ElementKey, int, IntVecHash> index;
  std::vector<ElementKey> keys{identity_key(d)};
  fam.words.push_back({});
  index.emplace(keys[0], 0);
  for (std::size_t at = 0; at < keys.size(); ++at) {
    for (int i = 0; i < d.n; ++i) {
      ElementKey next = left_multiply(d, i, keys[at]);
      if (index.count(next)) continue;
      bool minimal = true;
      for (int c = 0; c < d.n && minimal; ++c)
        if (c != j) minimal = image_positive(d, next, c);
      if (!minimal) continue;
      // BFS level order makes the recorded word reduced.
      Word w = fam.words[at];
      w.push_back(i);
      if (!is_reduced(d, w)) continue;  // length went down: not a new level
      index.emplace(next, static_cast<int>(keys.size()));
      keys.push_back(std::move(next));
      fam.words.push_back(std::move(w));
    }
  }
  fam.longest = 0;
  for (std::size_t k = 0; k < fam.words.size(); ++k)
    if (fam.words[k].size() > fam.words[fam.longest].size()) fam.longest = static_cast<int>(k);
  return fam;
}

MoveCheck check_move_sequence(const CartanData& d, int j, int k, const Word& moves) {
  MoveCheck mc;
  auto roots = inversion_roots(d, moves);
  RootSet seen;
  for (std::size_t l = 0; l < roots.size(); ++l) {
    if (!is_positive(roots[l]) || roots[l][j] <= 0 || !seen.insert(roots[l]).second) {
      mc.failed_step = static_cast<int>(l);
      return mc;
    }
    mc.chip_counts.push_back(k * roots[l][j]);
  }
  mc.legal = true;
  return mc;
}

std::vector<Word> all_move_sequences(const CartanData& d, int j, int k) {
  Game g = modified_game(dual(d), j, k);
  std::vector<Word> out;
  struct Frame {
    IntVec chips;
    Word moves;
  };
  std::vector<Frame> stack{{IntVec(d.n, 0), {}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    out.push_back(f.moves);
    for (int i = 0; i < d.n; ++i) {
      if (status(g, f.chips, i) != VertexStatus::Unhappy) continue;
      Frame next{fire(g, f.chips, i), f.moves};
      next.moves.push_back(i);
      stack.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> all_reduced_words_of_coset_reps(const CartanData& d, int j) {
  std::vector<Word> out;
  struct Frame {
    ElementKey key;
    Word word;
  };
  std::vector<Frame> stack{{identity_key(d), {}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    out.push_back(f.word);
    for (int i = 0; i < d.n; ++i) {
      ElementKey next = left_multiply(d, i, f.key);
      Word w = f.word;
      w.push_back(i);
      if (!is_reduced(d, w)) continue;
      bool minimal = true;
      for (int c = 0; c < d.n && minimal; ++c)
        if (c != j) minimal = image_positive(d, next, c);
      if (!minimal) continue;
      stack.push_back({std::move(next), std::move(w)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kostant
