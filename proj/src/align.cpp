#include "dali/align.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "dali/error.hpp"
#include "dali/textio.hpp"

namespace dali {

const char* direction_name(Direction d) {
    return d == Direction::forward ? "forward" : "backward";
}

double TranslationTable::prob(const std::string& conditioning, const std::string& candidate) const {
    auto row = probs.find(conditioning);
    if (row == probs.end()) return 0.0;
    auto cell = row->second.find(candidate);
    return cell == row->second.end() ? 0.0 : cell->second;
}

namespace {

// Sentence pairs mapped to integer ids, oriented so that `cond` carries the
// conditioning side of the table being trained. Conditioning id 0 is NULL.
struct IdCorpus {
    std::vector<std::vector<int>> cond;
    std::vector<std::vector<int>> cand;
    std::vector<std::string> cond_words;  // cond_words[0] == kNullToken
    std::vector<std::string> cand_words;
};

IdCorpus to_ids(const ParallelCorpus& parallel, Direction direction) {
    IdCorpus ids;
    ids.cond_words.push_back(kNullToken);
    std::unordered_map<std::string, int> cond_map, cand_map;
    auto intern = [](const std::string& w, std::unordered_map<std::string, int>& m,
                     std::vector<std::string>& words) {
        auto [it, inserted] = m.emplace(w, static_cast<int>(words.size()));
        if (inserted) words.push_back(w);
        return it->second;
    };
    ids.cond.reserve(parallel.size());
    ids.cand.reserve(parallel.size());
    for (const auto& sp : parallel.pairs) {
        const Sentence& cond_sent = direction == Direction::forward ? sp.source : sp.target;
        const Sentence& cand_sent = direction == Direction::forward ? sp.target : sp.source;
        std::vector<int> c, f;
        c.reserve(cond_sent.size());
        f.reserve(cand_sent.size());
        for (const auto& w : cond_sent) c.push_back(intern(w, cond_map, ids.cond_words));
        for (const auto& w : cand_sent) f.push_back(intern(w, cand_map, ids.cand_words));
        ids.cond.push_back(std::move(c));
        ids.cand.push_back(std::move(f));
    }
    return ids;
}

// Sparse row-stochastic table: per conditioning id, sorted candidate ids and
// aligned probabilities.
struct SparseTable {
    std::vector<std::vector<int>> cands;
    std::vector<std::vector<double>> probs;

    double lookup(int e, int f) const {
        const auto& row = cands[e];
        auto it = std::lower_bound(row.begin(), row.end(), f);
        if (it == row.end() || *it != f) return 0.0;
        return probs[e][it - row.begin()];
    }
};

constexpr size_t kEmBlock = 256;  // sentences per reduction block

}  // namespace

TranslationTable train_model1(const ParallelCorpus& parallel, const Model1Options& opts,
                              std::vector<double>* loglik_trace) {
    if (parallel.pairs.empty()) throw empty_error("cannot train on an empty parallel corpus");
    if (opts.iterations < 1) throw param_error("model 1 iterations must be >= 1");
    if (opts.prob_floor < 0.0 || opts.prob_floor >= 1.0)
        throw param_error("prob_floor must be in [0, 1)");

    IdCorpus ids = to_ids(parallel, opts.direction);
    const size_t num_cond = ids.cond_words.size();
    const size_t num_sent = ids.cond.size();

    // Co-occurrence support. NULL (id 0) co-occurs with every candidate word.
    SparseTable t;
    t.cands.resize(num_cond);
    for (size_t s = 0; s < num_sent; ++s) {
        for (int e : ids.cond[s]) {
            auto& row = t.cands[e];
            row.insert(row.end(), ids.cand[s].begin(), ids.cand[s].end());
        }
    }
    t.cands[0].resize(ids.cand_words.size());
    for (size_t f = 0; f < ids.cand_words.size(); ++f) t.cands[0][f] = static_cast<int>(f);
    for (auto& row : t.cands) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    t.probs.resize(num_cond);
    for (size_t e = 0; e < num_cond; ++e)
        t.probs[e].assign(t.cands[e].size(), t.cands[e].empty() ? 0.0 : 1.0 / t.cands[e].size());

    const size_t num_blocks = (num_sent + kEmBlock - 1) / kEmBlock;

    for (int iter = 0; iter < opts.iterations; ++iter) {
        std::vector<std::unordered_map<uint64_t, double>> block_counts(num_blocks);
        std::vector<double> block_loglik(num_blocks, 0.0);

        // Blocks are fixed-size so the reduction order below does not depend
        // on the thread count; reruns are bit-identical.
#pragma omp parallel for schedule(dynamic)
        for (int64_t b = 0; b < static_cast<int64_t>(num_blocks); ++b) {
            auto& local = block_counts[b];
            double ll = 0.0;
            size_t begin = b * kEmBlock;
            size_t end = std::min(begin + kEmBlock, num_sent);
            for (size_t s = begin; s < end; ++s) {
                const auto& cond_sent = ids.cond[s];
                const auto& cand_sent = ids.cand[s];
                double len_norm = 1.0 / (static_cast<double>(cond_sent.size()) + 1.0);
                for (int f : cand_sent) {
                    double denom = t.lookup(0, f);
                    for (int e : cond_sent) denom += t.lookup(e, f);
                    ll += std::log(denom * len_norm);
                    double inv = 1.0 / denom;
                    auto add = [&](int e) {
                        double p = t.lookup(e, f);
                        if (p > 0.0)
                            local[(static_cast<uint64_t>(e) << 32) | static_cast<uint32_t>(f)] +=
                                p * inv;
                    };
                    add(0);
                    for (int e : cond_sent) add(e);
                }
            }
            block_loglik[b] = ll;
        }

        if (loglik_trace) {
            double total = 0.0;
            for (double ll : block_loglik) total += ll;
            loglik_trace->push_back(total);
        }

        // Serial merge in block order.
        std::vector<std::vector<double>> counts(num_cond);
        for (size_t e = 0; e < num_cond; ++e) counts[e].assign(t.cands[e].size(), 0.0);
        for (size_t b = 0; b < num_blocks; ++b) {
            for (const auto& [key, value] : block_counts[b]) {
                int e = static_cast<int>(key >> 32);
                int f = static_cast<int>(key & 0xffffffffu);
                const auto& row = t.cands[e];
                auto it = std::lower_bound(row.begin(), row.end(), f);
                counts[e][it - row.begin()] += value;
            }
        }

        for (size_t e = 0; e < num_cond; ++e) {
            double total = 0.0;
            for (double c : counts[e]) total += c;
            if (total <= 0.0) continue;
            double inv = 1.0 / total;
            for (size_t k = 0; k < counts[e].size(); ++k) t.probs[e][k] = counts[e][k] * inv;
        }
    }

    TranslationTable table;
    table.direction = opts.direction;
    for (size_t e = 0; e < num_cond; ++e) {
        std::map<std::string, double> row;
        double kept_mass = 0.0;
        for (size_t k = 0; k < t.cands[e].size(); ++k) {
            double p = t.probs[e][k];
            if (p <= 0.0 || p < opts.prob_floor) continue;
            row.emplace(ids.cand_words[t.cands[e][k]], p);
            kept_mass += p;
        }
        if (row.empty() || kept_mass <= 0.0) continue;
        for (auto& [w, p] : row) p /= kept_mass;
        table.probs.emplace(ids.cond_words[e], std::move(row));
    }
    return table;
}

double model1_loglik(const ParallelCorpus& parallel, const TranslationTable& table) {
    const bool forward = table.direction == Direction::forward;
    double ll = 0.0;
    for (const auto& sp : parallel.pairs) {
        const Sentence& cond_sent = forward ? sp.source : sp.target;
        const Sentence& cand_sent = forward ? sp.target : sp.source;
        double len_norm = 1.0 / (static_cast<double>(cond_sent.size()) + 1.0);
        for (const auto& f : cand_sent) {
            double denom = table.prob(kNullToken, f);
            for (const auto& e : cond_sent) denom += table.prob(e, f);
            ll += denom > 0.0 ? std::log(denom * len_norm)
                              : -std::numeric_limits<double>::infinity();
        }
    }
    return ll;
}

TranslationTable import_table(const std::string& path, Direction direction) {
    TranslationTable table;
    table.direction = direction;
    auto lines = read_lines(path);
    for (size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.empty() || line[0] == '#') continue;
        auto t1 = line.find('\t');
        auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos || t1 == 0 || t2 == t1 + 1)
            throw parse_error(path + ":" + std::to_string(i + 1) +
                              ": expected conditioning<TAB>candidate<TAB>prob");
        std::string conditioning = line.substr(0, t1);
        std::string candidate = line.substr(t1 + 1, t2 - t1 - 1);
        std::string prob_str = line.substr(t2 + 1);
        char* endp = nullptr;
        double p = std::strtod(prob_str.c_str(), &endp);
        if (endp == prob_str.c_str() || *endp != '\0')
            throw parse_error(path + ":" + std::to_string(i + 1) +
                              ": probability is not a number: " + prob_str);
        if (!(p > 0.0) || p > 1.0)
            throw data_error(path + ":" + std::to_string(i + 1) +
                             ": probability outside (0,1]: " + prob_str);
        auto [it, inserted] = table.probs[conditioning].emplace(candidate, p);
        if (!inserted) it->second += p;
    }
    for (auto& [cond, row] : table.probs) {
        double total = 0.0;
        for (const auto& [cand, p] : row) total += p;
        for (auto& [cand, p] : row) p /= total;
    }
    return table;
}

void export_table(const TranslationTable& table, const std::string& path) {
    std::ostringstream out;
    for (const auto& [cond, row] : table.probs)
        for (const auto& [cand, p] : row)
            out << cond << '\t' << cand << '\t' << format_double(p) << '\n';
    atomic_write(path, out.str());
}

std::vector<WordPair> directional_lexicon(const TranslationTable& table) {
    std::vector<WordPair> pairs;
    for (const auto& [cond, row] : table.probs) {
        if (cond == kNullToken) continue;
        for (const auto& [cand, p] : row) {
            if (cand == kNullToken) continue;
            if (p <= 0.0) continue;
            if (table.direction == Direction::forward) {
                pairs.emplace_back(cond, cand);
            } else {
                pairs.emplace_back(cand, cond);
            }
        }
    }
    return pairs;
}

}  // namespace dali
