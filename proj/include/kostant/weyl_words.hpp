#pragma once

#include <optional>
#include <vector>

#include "kostant/root_system.hpp"

// Reduced words, inversion sets, minimal coset representatives W^j, and the
// correspondence between modified-game move sequences and reduced words.
//
// A word stores its letters in application order: letters (i_1, ..., i_t)
// denote w = s_{i_t} ... s_{i_1}.

namespace kostant {

using Word = std::vector<int>;

// Inversion roots of a reduced word: the k-th entry is
// s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}).  Returns nullopt when the word is
// not reduced (a repeated or negative root shows up).
std::optional<std::vector<IntVec>> inversions(const CartanData& d, const Word& letters);

bool is_reduced(const CartanData& d, const Word& letters);

// Weyl group element as its action on the simple roots, flattened row-major;
// suffices for equality tests and hashing at the ranks we handle.
using ElementKey = IntVec;

ElementKey identity_key(const CartanData& d);
ElementKey apply_word_key(const CartanData& d, const Word& letters);

// Brute-force order of the subgroup generated by the given simple
// reflections (all of them when `generators` is empty).
std::size_t group_order(const CartanData& d, const std::vector<int>& generators = {});

struct CosetFamily {
  int excluded = 0;                 // the vertex j
  std::vector<Word> words;          // one reduced word per element of W^j
  int longest = 0;                  // index of w_0 in `words`
};

// All minimal length representatives of W / W_j, by BFS from the identity
// adding letters on the left.  Keeps one reduced word per element.
CosetFamily coset_reps(const CartanData& d, int j);

// Move sequences of the modified game at j with k arrows, versus reduced
// words.  A sequence is legal iff it is a reduced word all of whose
// inversions have a positive alpha_j coefficient; the chips placed at step l
// then number k times that coefficient of the l-th inversion.
struct MoveCheck {
  bool legal = false;
  int failed_step = -1;          // first illegal step when not legal
  std::vector<int> chip_counts;  // per move, when legal
};

MoveCheck check_move_sequence(const CartanData& d, int j, int k, const Word& moves);

// Every legal move sequence of the modified game on the coroot diagram at j
// (enumerated by DFS over partial plays).
std::vector<Word> all_move_sequences(const CartanData& d, int j, int k = 1);

// Every reduced word of every element of W^j (including the empty word).
std::vector<Word> all_reduced_words_of_coset_reps(const CartanData& d, int j);

}  // namespace kostant
