#pragma once

#include <cstdint>
#include <map>
#include <string_view>

#include "dali/align.hpp"
#include "dali/corpus.hpp"
#include "dali/lexicon.hpp"

namespace dali {

using PairCounts = std::map<WordPair, uint64_t>;

// True when every codepoint of the (UTF-8) token has Unicode general
// category P* or S*. Malformed byte sequences make a token non-punctuation.
bool is_punct_only(std::string_view token);

// Set union of two directed pair lists, output sorted (source, target).
std::vector<WordPair> union_lexicons(const std::vector<WordPair>& fw,
                                     const std::vector<WordPair>& bw);

// Drops pairs where one side is punctuation-only and the sides differ;
// identical punctuation pairs survive.
std::vector<WordPair> prune_punct(const std::vector<WordPair>& pairs);

// Sentence-level containment counts: pair (s,t) scores one per sentence pair
// whose source contains s and target contains t, regardless of how often.
// Inverted-index implementation, parallel over pairs.
PairCounts count_pairs(const std::vector<WordPair>& pairs, const ParallelCorpus& parallel);

// Same semantics as count_pairs via the direct double loop over sentence
// pairs and candidate pairs. Kept as the reference for equivalence tests.
PairCounts count_pairs_literal(const std::vector<WordPair>& pairs, const ParallelCorpus& parallel);

// Greedy one-to-one selection by descending count; ties broken by
// (source, target) lexicographic order. Zero-count pairs are skipped.
Lexicon select_one_to_one(const PairCounts& counts);

// union -> prune -> count -> select over tables trained on `parallel`.
Lexicon extract_seed_lexicon(const ParallelCorpus& parallel, const TranslationTable& fw,
                             const TranslationTable& bw);

}  // namespace dali
