#include "dali/lexicon.hpp"

#include <sstream>
#include <unordered_set>

#include "dali/error.hpp"
#include "dali/textio.hpp"

namespace dali {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::seed: return "seed";
        case Provenance::induced: return "induced";
        case Provenance::reference: return "reference";
        case Provenance::imported: return "imported";
    }
    return "imported";
}

Provenance provenance_from_name(const std::string& name) {
    if (name == "seed") return Provenance::seed;
    if (name == "induced") return Provenance::induced;
    if (name == "reference") return Provenance::reference;
    if (name == "imported") return Provenance::imported;
    throw parse_error("unknown lexicon provenance: " + name);
}

bool Lexicon::is_one_to_one() const {
    std::unordered_set<std::string> sources, targets;
    for (const auto& [s, t] : pairs) {
        if (!sources.insert(s).second) return false;
        if (!targets.insert(t).second) return false;
    }
    return true;
}

void save_lexicon(const Lexicon& lexicon, const std::string& path) {
    std::ostringstream out;
    out << "# provenance: " << provenance_name(lexicon.provenance) << "\n";
    for (const auto& [s, t] : lexicon.pairs) out << s << '\t' << t << '\n';
    atomic_write(path, out.str());
}

Lexicon load_lexicon(const std::string& path) {
    Lexicon lexicon;
    lexicon.provenance = Provenance::imported;
    auto lines = read_lines(path);
    for (size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto pos = line.find("provenance:");
            if (pos != std::string::npos) {
                auto name = line.substr(pos + 11);
                auto ws = name.find_first_not_of(" \t");
                if (ws != std::string::npos)
                    lexicon.provenance = provenance_from_name(name.substr(ws));
            }
            continue;
        }
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
            throw parse_error(path + ":" + std::to_string(i + 1) + ": expected source<TAB>target");
        lexicon.pairs.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
    return lexicon;
}

}  // namespace dali
