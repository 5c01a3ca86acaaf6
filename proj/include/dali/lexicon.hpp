#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dali {

using WordPair = std::pair<std::string, std::string>;  // always (source, target)

enum class Provenance { seed, induced, reference, imported };

const char* provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

// One-to-one translation pair list: no source word and no target word
// appears twice. Pair order is meaningful (selection order).
struct Lexicon {
    std::vector<WordPair> pairs;
    Provenance provenance = Provenance::seed;

    size_t size() const { return pairs.size(); }
    bool empty() const { return pairs.empty(); }
    bool is_one_to_one() const;
};

// TSV "source<TAB>target", one pair per line. A leading "# provenance: ..."
// comment records where the lexicon came from.
void save_lexicon(const Lexicon& lexicon, const std::string& path);
Lexicon load_lexicon(const std::string& path);

}  // namespace dali
