#include "dali/corpus.hpp"

#include <string>

#include "dali/error.hpp"
#include "dali/textio.hpp"

namespace dali {

uint64_t Corpus::num_tokens() const {
    uint64_t n = 0;
    for (const auto& s : sentences) n += s.size();
    return n;
}

Corpus load_monolingual(const std::string& path, Side side, const std::string& domain) {
    Corpus corpus;
    corpus.side = side;
    corpus.domain_label = domain;
    for (auto& line : read_lines(path)) {
        auto tokens = split_whitespace(line);
        if (tokens.empty()) continue;
        corpus.sentences.push_back(std::move(tokens));
    }
    if (corpus.sentences.empty())
        throw empty_error("no non-blank lines in corpus file: " + path);
    return corpus;
}

ParallelCorpus load_parallel(const std::string& src_path, const std::string& tgt_path) {
    auto src_lines = read_lines(src_path);
    auto tgt_lines = read_lines(tgt_path);
    if (src_lines.size() != tgt_lines.size()) {
        throw data_error("parallel line count mismatch: " + src_path + " has " +
                         std::to_string(src_lines.size()) + " lines, " + tgt_path + " has " +
                         std::to_string(tgt_lines.size()));
    }
    ParallelCorpus parallel;
    parallel.pairs.reserve(src_lines.size());
    for (size_t i = 0; i < src_lines.size(); ++i) {
        SentencePair pair;
        pair.source = split_whitespace(src_lines[i]);
        pair.target = split_whitespace(tgt_lines[i]);
        if (pair.source.empty() || pair.target.empty()) {
            throw data_error("blank line at " + std::to_string(i + 1) +
                             " in parallel corpus (" + src_path + ", " + tgt_path + ")");
        }
        parallel.pairs.push_back(std::move(pair));
    }
    if (parallel.pairs.empty())
        throw empty_error("empty parallel corpus: " + src_path);
    return parallel;
}

Vocabulary build_vocab(const std::vector<Sentence>& sentences, uint64_t min_count) {
    if (min_count < 1) throw param_error("min_count must be >= 1");
    std::map<std::string, uint64_t> raw;
    for (const auto& sent : sentences)
        for (const auto& tok : sent) ++raw[tok];

    Vocabulary vocab;
    for (auto& [tok, count] : raw) {
        if (count < min_count) continue;
        vocab.entries.emplace(tok, count);
        vocab.total_tokens += count;
    }
    if (vocab.entries.empty())
        throw empty_error("min_count " + std::to_string(min_count) + " filters out every token");
    return vocab;
}

Vocabulary build_vocab(const Corpus& corpus, uint64_t min_count) {
    if (corpus.sentences.empty()) throw empty_error("cannot build vocabulary of an empty corpus");
    return build_vocab(corpus.sentences, min_count);
}

CorpusStats corpus_stats(const Corpus& corpus) {
    if (corpus.sentences.empty()) throw empty_error("corpus_stats on empty corpus");
    CorpusStats stats;
    stats.words = corpus.num_tokens();
    stats.sentences = corpus.size();
    stats.words_per_sentence = static_cast<double>(stats.words) / static_cast<double>(stats.sentences);
    return stats;
}

OovStats oov_stats(const Vocabulary& out_vocab, const Vocabulary& in_vocab) {
    if (out_vocab.entries.empty() || in_vocab.entries.empty())
        throw param_error("oov_stats requires non-empty vocabularies");
    OovStats stats;
    for (const auto& [tok, count] : in_vocab.entries) {
        (void)count;
        if (!out_vocab.contains(tok)) ++stats.new_types;
    }
    stats.ratio = round_half_up2(static_cast<double>(stats.new_types) /
                                 static_cast<double>(out_vocab.entries.size()));
    return stats;
}

}  // namespace dali
