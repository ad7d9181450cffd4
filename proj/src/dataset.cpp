#include "fg/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fg {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

} // namespace

Manifest parse_manifest_csv(std::istream& is) {
    Manifest m;
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty manifest");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const bool has_split = line == "path,label,split";
    if (!has_split && line != "path,label")
        throw std::runtime_error("manifest header must be `path,label` or `path,label,split`");

    std::set<std::string> seen;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != (has_split ? 3u : 2u))
            throw std::runtime_error("manifest line " + std::to_string(lineno) +
                                     ": wrong field count");
        ManifestEntry e;
        e.path = fields[0];
        e.label = fields[1];
        e.split = has_split ? fields[2] : "";
        if (e.path.empty())
            throw std::runtime_error("manifest line " + std::to_string(lineno) + ": empty path");
        if (e.label.empty())
            throw std::runtime_error("manifest line " + std::to_string(lineno) + ": empty label");
        if (!e.split.empty() && e.split != "train" && e.split != "val")
            throw std::runtime_error("manifest line " + std::to_string(lineno) +
                                     ": split must be train or val");
        if (!seen.insert(e.path).second)
            throw std::runtime_error("manifest line " + std::to_string(lineno) +
                                     ": duplicate path " + e.path);
        m.entries.push_back(std::move(e));
    }
    return m;
}

Manifest read_manifest_csv(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open manifest: " + path);
    return parse_manifest_csv(is);
}

std::string manifest_to_csv(const Manifest& m) {
    const bool has_split =
        std::any_of(m.entries.begin(), m.entries.end(),
                    [](const ManifestEntry& e) { return !e.split.empty(); });
    std::ostringstream os;
    os << (has_split ? "path,label,split\n" : "path,label\n");
    for (const ManifestEntry& e : m.entries) {
        os << e.path << ',' << e.label;
        if (has_split) os << ',' << e.split;
        os << '\n';
    }
    return os.str();
}

void write_manifest_csv(const Manifest& m, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open file for writing: " + path);
    os << manifest_to_csv(m);
    if (!os) throw std::runtime_error("I/O error writing: " + path);
}

Manifest stratified_split(const Manifest& m, double train_fraction, Rng& rng) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw std::invalid_argument("train_fraction must lie in (0, 1)");
    if (m.entries.empty()) throw std::invalid_argument("empty manifest");

    std::map<std::string, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < m.entries.size(); ++i)
        by_class[m.entries[i].label].push_back(i);

    Manifest out = m;
    for (auto& [label, indices] : by_class) {
        const auto n = indices.size();
        if (n < 2)
            throw std::invalid_argument("class " + label +
                                        " has fewer than 2 entries; cannot split");
        for (std::size_t i = n - 1; i > 0; --i) {
            const auto j = static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<std::int64_t>(i)));
            std::swap(indices[i], indices[j]);
        }
        auto n_train = static_cast<std::size_t>(
            std::floor(train_fraction * static_cast<double>(n)));
        n_train = std::clamp<std::size_t>(n_train, 1, n - 1);
        for (std::size_t i = 0; i < n; ++i)
            out.entries[indices[i]].split = i < n_train ? "train" : "val";
    }
    return out;
}

std::map<std::string, double> class_weights(const Manifest& m) {
    if (m.entries.empty()) throw std::invalid_argument("empty manifest");
    std::map<std::string, std::size_t> counts;
    for (const ManifestEntry& e : m.entries) ++counts[e.label];
    const double total = static_cast<double>(m.entries.size());
    const double k = static_cast<double>(counts.size());
    std::map<std::string, double> weights;
    for (const auto& [label, n] : counts)
        weights[label] = total / (k * static_cast<double>(n));
    return weights;
}

} // namespace fg
