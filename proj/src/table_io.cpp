#include "harmseq/table_io.hpp"

#include <fstream>
#include <sstream>

#include "harmseq/errors.hpp"

namespace harmseq {

namespace {

std::string next_line(std::istream& in, int& lineno) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) return line;
    }
    throw InputError("table file: unexpected end of input at line " + std::to_string(lineno));
}

}  // namespace

GroupPtr load_cayley_table(std::istream& in) {
    int lineno = 0;
    std::string line = next_line(in, lineno);
    long long n = 0;
    {
        std::istringstream ls(line);
        if (!(ls >> n) || n < 1)
            throw InputError("table file line " + std::to_string(lineno) +
                             ": expected the group order");
        std::string extra;
        if (ls >> extra)
            throw InputError("table file line " + std::to_string(lineno) +
                             ": unexpected token '" + extra + "' after the order");
        if (n > 4096)
            throw InputError("table file: order " + std::to_string(n) +
                             " exceeds the supported maximum 4096");
    }
    std::vector<std::string> names;
    {
        std::istringstream ls(next_line(in, lineno));
        std::string tok;
        while (ls >> tok) names.push_back(tok);
        if (static_cast<long long>(names.size()) != n)
            throw InputError("table file line " + std::to_string(lineno) + ": expected " +
                             std::to_string(n) + " element names, got " +
                             std::to_string(names.size()));
    }
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (long long row = 0; row < n; ++row) {
        std::istringstream ls(next_line(in, lineno));
        long long v;
        int count = 0;
        while (ls >> v) {
            if (v < 0 || v >= n)
                throw InputError("table file line " + std::to_string(lineno) + ": index " +
                                 std::to_string(v) + " out of range");
            table.push_back(static_cast<int>(v));
            ++count;
        }
        if (count != n)
            throw InputError("table file line " + std::to_string(lineno) + ": expected " +
                             std::to_string(n) + " indices, got " + std::to_string(count));
    }
    return FiniteGroup::from_table(std::move(names), std::move(table));
}

GroupPtr load_cayley_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open table file: " + path);
    return load_cayley_table(in);
}

void write_cayley_table(std::ostream& out, const FiniteGroup& g) {
    const int n = g.order();
    out << n << "\n";
    for (int i = 0; i < n; ++i) out << (i ? " " : "") << g.name(i);
    out << "\n";
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) out << (b ? " " : "") << g.mul(a, b);
        out << "\n";
    }
}

}  // namespace harmseq
