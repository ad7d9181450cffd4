#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace fg {

/// Per-class classification report. labels is the sorted union of true
/// and predicted labels; confusion(r, c) counts samples with true label
/// labels[r] predicted as labels[c]. Zero denominators yield 0 scores.
struct EvalReport {
    std::vector<std::string> labels;
    Eigen::MatrixXi confusion;
    std::vector<double> precision;
    std::vector<double> recall;
    std::vector<double> f1;
    double accuracy = 0.0;
};

/// Builds the report from (true, predicted) label pairs.
EvalReport evaluate(const std::vector<std::pair<std::string, std::string>>& pairs);

nlohmann::json eval_report_to_json(const EvalReport& report);

/// Aligned text table: one row per class with precision, recall and F1
/// to two decimals, then an accuracy line.
std::string eval_report_table(const EvalReport& report);

} // namespace fg
