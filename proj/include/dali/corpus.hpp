#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dali {

enum class Side { source, target };

using Sentence = std::vector<std::string>;

// Tokenized monolingual text. Tokens are whatever the caller's segmentation
// produced (words or subwords); they are treated as opaque atoms and case is
// preserved. Immutable after loading.
struct Corpus {
    std::vector<Sentence> sentences;
    Side side = Side::source;
    std::string domain_label;

    size_t size() const { return sentences.size(); }
    uint64_t num_tokens() const;
};

struct SentencePair {
    Sentence source;
    Sentence target;
};

struct ParallelCorpus {
    std::vector<SentencePair> pairs;

    size_t size() const { return pairs.size(); }
};

struct Vocabulary {
    std::map<std::string, uint64_t> entries;  // token -> raw frequency
    uint64_t total_tokens = 0;

    bool contains(const std::string& token) const { return entries.count(token) != 0; }
    size_t size() const { return entries.size(); }
};

struct CorpusStats {
    uint64_t words = 0;
    uint64_t sentences = 0;
    double words_per_sentence = 0.0;
};

struct OovStats {
    uint64_t new_types = 0;
    double ratio = 0.0;  // new_types / |out vocab|, rounded to two decimals
};

// One sentence per line, whitespace-separated tokens. Blank lines are
// skipped; line order is preserved.
Corpus load_monolingual(const std::string& path, Side side, const std::string& domain);

// Two line-aligned files; line i of each forms pair i. A blank line on
// either side is an error because it would desynchronize the alignment.
ParallelCorpus load_parallel(const std::string& src_path, const std::string& tgt_path);

Vocabulary build_vocab(const Corpus& corpus, uint64_t min_count = 1);
Vocabulary build_vocab(const std::vector<Sentence>& sentences, uint64_t min_count = 1);

CorpusStats corpus_stats(const Corpus& corpus);

// Counts in-domain types absent from the out-of-domain vocabulary.
OovStats oov_stats(const Vocabulary& out_vocab, const Vocabulary& in_vocab);

}  // namespace dali
