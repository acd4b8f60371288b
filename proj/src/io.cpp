#include "qsp/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qsp {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
    if (!out) throw ParseError("write failed for " + path);
}

double parse_field(const std::string& field, const std::string& path, std::size_t line_no) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(field, &pos);
    } catch (const std::exception&) {
        throw ParseError(path + ":" + std::to_string(line_no) + ": not a number: '" + field +
                         "'");
    }
    while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos]))) ++pos;
    if (pos != field.size())
        throw ParseError(path + ":" + std::to_string(line_no) + ": trailing characters in '" +
                         field + "'");
    return v;
}

}  // namespace

RawMatrix load_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);

    RawMatrix m;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<double> row;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) row.push_back(parse_field(field, path, line_no));
        if (line.back() == ',')
            throw ParseError(path + ":" + std::to_string(line_no) + ": empty trailing field");

        if (m.cols == 0)
            m.cols = row.size();
        else if (row.size() != m.cols)
            throw ParseError(path + ":" + std::to_string(line_no) + ": expected " +
                             std::to_string(m.cols) + " fields, got " +
                             std::to_string(row.size()));
        m.data.insert(m.data.end(), row.begin(), row.end());
        ++m.rows;
    }
    if (m.rows == 0) throw ParseError(path + ": no matrix rows");
    return m;
}

RawMatrix load_matrix_json(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }

    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw ParseError(path + ": expected object with rows, cols and data");

    RawMatrix m;
    try {
        m.rows = j.at("rows").get<std::size_t>();
        m.cols = j.at("cols").get<std::size_t>();
        const auto& data = j.at("data");
        if (!data.is_array() || data.size() != m.rows)
            throw ParseError(path + ": data must hold " + std::to_string(m.rows) + " rows");
        for (const auto& row : data) {
            if (!row.is_array() || row.size() != m.cols)
                throw ParseError(path + ": every row must hold " + std::to_string(m.cols) +
                                 " values");
            for (const auto& v : row) m.data.push_back(v.get<double>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return m;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_amplitudes_json(const std::string& path, const PrepResult& result) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"frobenius\": " << format_double(result.frobenius) << ",\n";
    out << "  \"k\": " << result.depth << ",\n";
    out << "  \"amplitudes\": [\n";
    bool first = true;
    for (std::size_t i = 0; i < result.rows; ++i) {
        for (std::size_t j = 0; j < result.cols; ++j) {
            if (!first) out << ",\n";
            first = false;
            out << "    {\"i\": " << i << ", \"j\": " << j
                << ", \"value\": " << format_double(result.amplitude(i, j)) << "}";
        }
    }
    out << "\n  ]\n}\n";
    write_file(path, out.str());
}

void write_cost_json(const std::string& path, const CostReport& report) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"k\": " << report.depth << ",\n";
    out << "  \"cells\": " << report.cells << ",\n";
    out << "  \"prep\": {\n";
    out << "    \"queries\": " << report.prep.queries << ",\n";
    out << "    \"routing_steps\": " << report.prep.routing_steps << ",\n";
    out << "    \"bus_steps\": " << report.prep.bus_steps << ",\n";
    out << "    \"copy_ops\": " << report.prep.copy_ops << ",\n";
    out << "    \"uncompute_steps\": " << report.prep.uncompute_steps << ",\n";
    out << "    \"qram_units\": " << report.qram_units << ",\n";
    out << "    \"gate_units\": " << report.gate_units << ",\n";
    out << "    \"total_units\": " << report.total_units << "\n";
    out << "  },\n";
    out << "  \"init\": {\n";
    out << "    \"writes\": " << report.init_writes << ",\n";
    out << "    \"total_units\": " << report.init_units << ",\n";
    out << "    \"expected_units\": " << report.expected_init_units << "\n";
    out << "  },\n";
    out << "  \"expected\": {\n";
    out << "    \"queries\": " << report.expected_queries << ",\n";
    out << "    \"qram_units\": " << report.expected_qram_units << ",\n";
    out << "    \"gate_units\": " << report.expected_gate_units << ",\n";
    out << "    \"total_units\": " << report.expected_total_units << "\n";
    out << "  },\n";
    const long long dev = static_cast<long long>(report.total_units) -
                          static_cast<long long>(report.expected_total_units);
    out << "  \"deviation\": " << dev << ",\n";
    out << "  \"matches_formula\": " << (report.matches_formula ? "true" : "false") << "\n";
    out << "}\n";
    write_file(path, out.str());
}

void write_trace_json(const std::string& path, const PrepResult& result) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"k\": " << result.depth << ",\n";
    out << "  \"frobenius\": " << format_double(result.frobenius) << ",\n";
    out << "  \"iterations\": [\n";
    for (std::size_t it = 0; it < result.trace.size(); ++it) {
        const IterationDump& dump = result.trace[it];
        out << "    {\"h\": " << dump.h << ", \"records\": [\n";
        for (std::size_t n = 0; n < dump.records.size(); ++n) {
            const StateRecord& rec = dump.records[n];
            out << "      {\"s\": " << static_cast<int>(rec.s)
                << ", \"l\": " << format_double(rec.l_decoded)
                << ", \"r\": " << format_double(rec.r_decoded)
                << ", \"v\": " << static_cast<int>(rec.v) << ", \"a\": " << rec.a
                << ", \"amp_real\": " << format_double(rec.amp_real)
                << ", \"amp_imag\": " << format_double(rec.amp_imag) << "}"
                << (n + 1 < dump.records.size() ? "," : "") << "\n";
        }
        out << "    ]}" << (it + 1 < result.trace.size() ? "," : "") << "\n";
    }
    out << "  ],\n";
    out << "  \"final\": [\n";
    bool first = true;
    for (std::size_t i = 0; i < result.rows; ++i) {
        for (std::size_t j = 0; j < result.cols; ++j) {
            if (!first) out << ",\n";
            first = false;
            out << "    {\"i\": " << i << ", \"j\": " << j
                << ", \"value\": " << format_double(result.amplitude(i, j)) << "}";
        }
    }
    out << "\n  ]\n}\n";
    write_file(path, out.str());
}

}  // namespace qsp
