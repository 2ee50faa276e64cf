#pragma once

#include <fstream>

#include "json.hpp"
#include "rampcast/preprocess.hpp"

namespace rampcast::matrix_io {

inline constexpr int kFormatVersion = 1;

inline std::string manifest_path(const std::string& matrix_path) {
    return matrix_path + ".manifest.json";
}

// Writes the instance matrix as CSV (origin_idx, flattened columns, target)
// plus a sidecar manifest describing the column layout. Values are printed
// with 17 significant digits so doubles survive the trip exactly.
inline void write_matrix(const preprocess::InstanceMatrix& matrix, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "origin_idx";
    for (const std::string& name : matrix.column_names) out << ',' << name;
    out << ",target\n";
    char buf[40];
    for (std::size_t i = 0; i < matrix.n_rows(); ++i) {
        out << matrix.rows[i].origin_idx;
        for (double v : matrix.flat_row(i)) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << ',' << buf;
        }
        out << ',' << label_name(matrix.rows[i].target) << '\n';
    }
    if (!out) throw IoError("write failed for " + path);

    nlohmann::ordered_json manifest;
    manifest["format"] = "rampcast-matrix";
    manifest["version"] = kFormatVersion;
    manifest["scheme"] = scheme_name(matrix.scheme);
    manifest["lag"] = matrix.lag;
    manifest["horizon"] = matrix.horizon;
    manifest["columns"] = matrix.column_names;
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (RampClass c : scheme_classes(matrix.scheme)) classes.push_back(label_name(c));
    manifest["classes"] = classes;
    manifest["unknown_code"] = -1;

    std::ofstream mout(manifest_path(path), std::ios::binary);
    if (!mout) throw IoError("cannot open " + manifest_path(path) + " for writing");
    mout << manifest.dump(2) << '\n';
    if (!mout) throw IoError("write failed for " + manifest_path(path));
}

inline preprocess::InstanceMatrix read_matrix(const std::string& path) {
    nlohmann::ordered_json manifest;
    {
        std::ifstream min(manifest_path(path), std::ios::binary);
        if (!min) throw IoError("cannot open " + manifest_path(path));
        try {
            min >> manifest;
        } catch (const std::exception& e) {
            throw ParseError(manifest_path(path) + ": " + e.what());
        }
    }
    if (manifest.value("format", "") != "rampcast-matrix" ||
        manifest.value("version", 0) != kFormatVersion) {
        throw ParseError(manifest_path(path) + ": not a matrix manifest");
    }

    preprocess::InstanceMatrix matrix;
    auto scheme = scheme_from_name(manifest.at("scheme").get<std::string>());
    if (!scheme) throw ParseError("unknown scheme in manifest");
    matrix.scheme = *scheme;
    matrix.lag = manifest.at("lag").get<std::size_t>();
    matrix.horizon = manifest.at("horizon").get<std::size_t>();
    matrix.column_names = manifest.at("columns").get<std::vector<std::string>>();
    const std::size_t l = matrix.lag;
    const std::size_t expected_cols = 2 * l + features::FeatureVector::kCount;
    if (matrix.column_names.size() != expected_cols) {
        throw ParseError("manifest column count does not match its lag");
    }

    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        auto fields = detail::split_csv_line(line);
        auto fail = [&](const std::string& what) {
            return ParseError(path + " line " + std::to_string(line_no) + ": " + what);
        };
        if (fields.size() != expected_cols + 2) throw fail("wrong column count");

        preprocess::Instance inst;
        std::int64_t origin = 0;
        if (!detail::parse_int64(fields[0], origin) || origin < 0) throw fail("bad origin_idx");
        inst.origin_idx = static_cast<std::size_t>(origin);

        std::vector<double> values(expected_cols);
        for (std::size_t c = 0; c < expected_cols; ++c) {
            if (!detail::parse_double(fields[c + 1], values[c])) {
                throw fail("bad number '" + std::string(fields[c + 1]) + "'");
            }
        }
        inst.powers.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(l));
        for (std::size_t k = 0; k < l; ++k) {
            inst.labels.push_back(
                class_from_code(matrix.scheme, static_cast<int>(values[l + k])));
        }
        inst.feature_vector = features::FeatureVector::from_values(
            std::span<const double>(values).subspan(2 * l));

        auto target = label_from_name(fields.back());
        if (!target || !in_scheme(matrix.scheme, *target)) {
            throw fail("bad target label '" + std::string(fields.back()) + "'");
        }
        inst.target = *target;
        matrix.rows.push_back(std::move(inst));
    }
    return matrix;
}

}  // namespace rampcast::matrix_io
