#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fg/rng.hpp"

namespace fg {

/// One corpus entry. split is "", "train" or "val".
struct ManifestEntry {
    std::string path;
    std::string label;
    std::string split;
};

/// Labeled corpus listing. Paths are unique, labels non-empty.
struct Manifest {
    std::vector<ManifestEntry> entries;
};

/// CSV with header `path,label[,split]`, UTF-8, LF line endings. Fields
/// may not contain commas.
Manifest parse_manifest_csv(std::istream& is);
Manifest read_manifest_csv(const std::string& path);
std::string manifest_to_csv(const Manifest& m);
void write_manifest_csv(const Manifest& m, const std::string& path);

/// Tags floor(train_fraction * n_c) entries of every class as train
/// (at least 1, always leaving at least 1 for val), the rest as val.
/// Selection is uniform given the seed; entry order is preserved.
/// Every class must have at least 2 entries.
Manifest stratified_split(const Manifest& m, double train_fraction, Rng& rng);

/// Balanced inverse-frequency weights w_c = N / (K * n_c), so that
/// sum_c w_c * n_c = N.
std::map<std::string, double> class_weights(const Manifest& m);

} // namespace fg
