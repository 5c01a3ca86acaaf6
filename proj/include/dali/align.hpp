#pragma once

#include <map>
#include <string>
#include <vector>

#include "dali/corpus.hpp"
#include "dali/lexicon.hpp"

namespace dali {

// Reserved empty-word token on the conditioning side of alignment tables.
inline constexpr const char* kNullToken = "<NULL>";

// forward tables hold P(t|s) keyed by s; backward tables hold P(s|t) keyed
// by t. Candidate probabilities of each conditioning word sum to 1.
enum class Direction { forward, backward };

const char* direction_name(Direction d);

struct TranslationTable {
    Direction direction = Direction::forward;
    std::map<std::string, std::map<std::string, double>> probs;

    // 0 when absent.
    double prob(const std::string& conditioning, const std::string& candidate) const;
};

struct Model1Options {
    Direction direction = Direction::forward;
    int iterations = 5;
    double prob_floor = 1e-4;
};

// IBM Model 1 EM with a NULL conditioning word and uniform initialization.
// Entries below prob_floor are pruned at the end and rows renormalized.
// Identical inputs give bit-identical tables, independent of thread count.
// When loglik_trace is given it receives the corpus log-likelihood before
// each M-step (non-decreasing across iterations).
TranslationTable train_model1(const ParallelCorpus& parallel, const Model1Options& opts = {},
                              std::vector<double>* loglik_trace = nullptr);

// Corpus log-likelihood of a table under Model 1 (with NULL), using the
// uniform 1/(len+1) alignment prior.
double model1_loglik(const ParallelCorpus& parallel, const TranslationTable& table);

// TSV rows "conditioning<TAB>candidate<TAB>prob", probabilities in (0,1];
// rows of each conditioning word are renormalized to sum to 1.
TranslationTable import_table(const std::string& path, Direction direction);
void export_table(const TranslationTable& table, const std::string& path);

// All pairs with positive probability, oriented (source, target) regardless
// of table direction. NULL entries are excluded.
std::vector<WordPair> directional_lexicon(const TranslationTable& table);

}  // namespace dali
