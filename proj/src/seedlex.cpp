#include "dali/seedlex.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "dali/error.hpp"

namespace dali {

#include "punct_ranges.inc"

namespace {

bool is_punct_codepoint(uint32_t cp) {
    size_t lo = 0, hi = sizeof(kPunctSymbolRanges) / sizeof(kPunctSymbolRanges[0]);
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (cp < kPunctSymbolRanges[mid][0]) {
            hi = mid;
        } else if (cp > kPunctSymbolRanges[mid][1]) {
            lo = mid + 1;
        } else {
            return true;
        }
    }
    return false;
}

// Decodes one UTF-8 codepoint at s[i]; returns false on malformed input.
bool decode_utf8(std::string_view s, size_t& i, uint32_t& cp) {
    unsigned char c = s[i];
    int extra;
    if (c < 0x80) {
        cp = c;
        extra = 0;
    } else if ((c & 0xE0) == 0xC0) {
        cp = c & 0x1F;
        extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
        cp = c & 0x0F;
        extra = 2;
    } else if ((c & 0xF8) == 0xF0) {
        cp = c & 0x07;
        extra = 3;
    } else {
        return false;
    }
    if (i + extra >= s.size()) return false;
    for (int k = 1; k <= extra; ++k) {
        unsigned char cc = s[i + k];
        if ((cc & 0xC0) != 0x80) return false;
        cp = (cp << 6) | (cc & 0x3F);
    }
    i += extra + 1;
    return cp <= 0x10FFFF;
}

}  // namespace

bool is_punct_only(std::string_view token) {
    if (token.empty()) return false;
    size_t i = 0;
    while (i < token.size()) {
        uint32_t cp = 0;
        if (!decode_utf8(token, i, cp)) return false;
        if (!is_punct_codepoint(cp)) return false;
    }
    return true;
}

std::vector<WordPair> union_lexicons(const std::vector<WordPair>& fw,
                                     const std::vector<WordPair>& bw) {
    std::set<WordPair> merged(fw.begin(), fw.end());
    merged.insert(bw.begin(), bw.end());
    return {merged.begin(), merged.end()};
}

std::vector<WordPair> prune_punct(const std::vector<WordPair>& pairs) {
    std::vector<WordPair> kept;
    kept.reserve(pairs.size());
    for (const auto& pair : pairs) {
        bool punct_side = is_punct_only(pair.first) || is_punct_only(pair.second);
        if (punct_side && pair.first != pair.second) continue;
        kept.push_back(pair);
    }
    return kept;
}

PairCounts count_pairs_literal(const std::vector<WordPair>& pairs, const ParallelCorpus& parallel) {
    PairCounts counts;
    for (const auto& pair : pairs) counts[pair] = 0;
    for (const auto& sp : parallel.pairs) {
        std::unordered_set<std::string_view> src(sp.source.begin(), sp.source.end());
        std::unordered_set<std::string_view> tgt(sp.target.begin(), sp.target.end());
        for (const auto& pair : pairs) {
            if (src.count(pair.first) && tgt.count(pair.second)) ++counts[pair];
        }
    }
    return counts;
}

PairCounts count_pairs(const std::vector<WordPair>& pairs, const ParallelCorpus& parallel) {
    // Postings: for each word, the sorted sentence indices containing it.
    std::unordered_map<std::string_view, std::vector<uint32_t>> src_postings, tgt_postings;
    for (uint32_t i = 0; i < parallel.pairs.size(); ++i) {
        for (const auto& tok : parallel.pairs[i].source) {
            auto& p = src_postings[tok];
            if (p.empty() || p.back() != i) p.push_back(i);
        }
        for (const auto& tok : parallel.pairs[i].target) {
            auto& p = tgt_postings[tok];
            if (p.empty() || p.back() != i) p.push_back(i);
        }
    }

    std::vector<uint64_t> per_pair(pairs.size(), 0);
    const std::vector<uint32_t> kEmpty;
#pragma omp parallel for schedule(static)
    for (int64_t idx = 0; idx < static_cast<int64_t>(pairs.size()); ++idx) {
        auto sit = src_postings.find(pairs[idx].first);
        auto tit = tgt_postings.find(pairs[idx].second);
        const auto& a = sit == src_postings.end() ? kEmpty : sit->second;
        const auto& b = tit == tgt_postings.end() ? kEmpty : tit->second;
        uint64_t n = 0;
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) {
                ++i;
            } else if (a[i] > b[j]) {
                ++j;
            } else {
                ++n;
                ++i;
                ++j;
            }
        }
        per_pair[idx] = n;
    }

    PairCounts counts;
    for (size_t idx = 0; idx < pairs.size(); ++idx) counts[pairs[idx]] = per_pair[idx];
    return counts;
}

Lexicon select_one_to_one(const PairCounts& counts) {
    std::vector<std::pair<WordPair, uint64_t>> ranked(counts.begin(), counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    Lexicon lexicon;
    lexicon.provenance = Provenance::seed;
    std::unordered_set<std::string> used_src, used_tgt;
    for (const auto& [pair, count] : ranked) {
        if (count == 0) continue;
        if (used_src.count(pair.first) || used_tgt.count(pair.second)) continue;
        used_src.insert(pair.first);
        used_tgt.insert(pair.second);
        lexicon.pairs.push_back(pair);
    }
    return lexicon;
}

Lexicon extract_seed_lexicon(const ParallelCorpus& parallel, const TranslationTable& fw,
                             const TranslationTable& bw) {
    auto merged = union_lexicons(directional_lexicon(fw), directional_lexicon(bw));
    auto pruned = prune_punct(merged);
    auto counts = count_pairs(pruned, parallel);
    Lexicon lexicon = select_one_to_one(counts);
    if (lexicon.empty()) throw empty_error("seed lexicon extraction produced no pairs");
    return lexicon;
}

}  // namespace dali
