#include "wavecons/csv.hpp"

#include "wavecons/error.hpp"

#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace wavecons {

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

void write_series(std::ostream& os, const DiagnosticsSeries& s) {
    os << "t";
    for (const char* prefix : {"I_", "psi_left_", "psi_right_", "balance_"}) {
        for (const auto& n : s.names) os << ',' << prefix << n;
    }
    os << '\n';
    for (std::size_t r = 0; r < s.records(); ++r) {
        os << format_double(s.t[r]);
        for (const auto* cols : {&s.I, &s.psi_left, &s.psi_right, &s.balance}) {
            for (const auto& col : *cols) os << ',' << format_double(col[r]);
        }
        os << '\n';
    }
}

void write_grid(std::ostream& os, const CoeffGrid& g) {
    os << "t,x,value\n";
    for (int i = 0; i < g.shape().nt; ++i) {
        for (int j = 0; j < g.shape().nx; ++j) {
            os << format_double(g.t(i)) << ',' << format_double(g.x(j)) << ',' << format_double(g.at(i, j))
               << '\n';
        }
    }
}

void write_report(std::ostream& os, const Report& r) {
    os << "key,value\n";
    for (const auto& [k, v] : r) os << k << ',' << v << '\n';
}

void write_series(const std::string& path, const DiagnosticsSeries& s) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error(path + ": " + std::strerror(errno));
    write_series(f, s);
    if (!f.flush()) throw std::runtime_error(path + ": write failed");
}

void write_grid(const std::string& path, const CoeffGrid& g) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error(path + ": " + std::strerror(errno));
    write_grid(f, g);
    if (!f.flush()) throw std::runtime_error(path + ": write failed");
}

void write_report(const std::string& path, const Report& r) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error(path + ": " + std::strerror(errno));
    write_report(f, r);
    if (!f.flush()) throw std::runtime_error(path + ": write failed");
}

DiagnosticsSeries read_series(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ValidationError("read_series: missing header");
    std::vector<std::string> head;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) head.push_back(cell);
    }
    if (head.empty() || head[0] != "t" || (head.size() - 1) % 4 != 0) {
        throw ValidationError("read_series: malformed header");
    }
    const std::size_t L = (head.size() - 1) / 4;
    DiagnosticsSeries s;
    for (std::size_t k = 0; k < L; ++k) {
        const std::string& h = head[1 + k];
        if (h.rfind("I_", 0) != 0) throw ValidationError("read_series: expected I_ column, got " + h);
        s.names.push_back(h.substr(2));
    }
    s.I.resize(L);
    s.psi_left.resize(L);
    s.psi_right.resize(L);
    s.balance.resize(L);
    std::size_t row = 1;
    while (std::getline(is, line)) {
        ++row;
        if (line.empty()) continue;
        std::vector<double> v;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            std::size_t end = line.find(',', pos);
            if (end == std::string::npos) end = line.size();
            double d = 0.0;
            auto [p, ec] = std::from_chars(line.data() + pos, line.data() + end, d);
            if (ec != std::errc() || p != line.data() + end) {
                throw ValidationError("read_series: bad number on row " + std::to_string(row));
            }
            v.push_back(d);
            pos = end + 1;
        }
        if (v.size() != head.size()) throw ValidationError("read_series: wrong column count on row " + std::to_string(row));
        s.t.push_back(v[0]);
        for (std::size_t k = 0; k < L; ++k) {
            s.I[k].push_back(v[1 + k]);
            s.psi_left[k].push_back(v[1 + L + k]);
            s.psi_right[k].push_back(v[1 + 2 * L + k]);
            s.balance[k].push_back(v[1 + 3 * L + k]);
        }
    }
    return s;
}

}  // namespace wavecons
