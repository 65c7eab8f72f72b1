#include "supersat/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace supersat {

namespace {

// strips comments and blanks; returns false at end of stream
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        return true;
    }
    return false;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

} // namespace

SetFamily read_family(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw std::runtime_error("family file: missing header");
    std::istringstream head(line);
    int n = 0, k = 0;
    if (!(head >> n >> k)) throw std::runtime_error("family file: header must be \"n k\"");
    std::vector<SetMask> members;
    while (next_content_line(in, line)) {
        std::vector<int> elems;
        std::string tok;
        std::istringstream row(line);
        while (std::getline(row, tok, ',')) {
            if (tok.empty()) continue;
            elems.push_back(std::stoi(tok));
        }
        for (size_t i = 1; i < elems.size(); ++i)
            if (elems[i] <= elems[i - 1])
                throw std::runtime_error("family file: elements must be strictly increasing");
        members.push_back(mask_from_elements(elems));
    }
    return make_family(n, k, std::move(members));
}

SetFamily read_family_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_family(in);
}

void write_family(std::ostream& out, const SetFamily& f) {
    out << f.n << ' ' << f.k << '\n';
    for (SetMask m : f.members) {
        std::vector<int> elems = mask_elements(m);
        for (size_t i = 0; i < elems.size(); ++i) out << (i ? "," : "") << elems[i];
        out << '\n';
    }
}

void write_family_file(const std::string& path, const SetFamily& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_family(out, f);
}

PermFamily read_perm_family(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw std::runtime_error("perm file: missing header");
    int n = std::stoi(line);
    std::vector<Perm> members;
    while (next_content_line(in, line)) {
        std::istringstream row(line);
        Perm p;
        int v;
        while (row >> v) p.img.push_back(v);
        members.push_back(std::move(p));
    }
    return make_perm_family(n, std::move(members));
}

PermFamily read_perm_family_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_perm_family(in);
}

void write_perm_family(std::ostream& out, const PermFamily& f) {
    out << f.n << '\n';
    for (const Perm& p : f.members) {
        for (int i = 0; i < p.n(); ++i) out << (i ? " " : "") << p.img[i];
        out << '\n';
    }
}

void write_perm_family_file(const std::string& path, const PermFamily& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_perm_family(out, f);
}

CosetSpec read_coset_spec(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw std::runtime_error("spec file: missing header");
    int n = std::stoi(line);
    std::vector<std::pair<int, int>> points;
    while (next_content_line(in, line)) {
        std::istringstream row(line);
        int i = 0, j = 0;
        if (!(row >> i >> j)) throw std::runtime_error("spec file: lines must be \"i j\"");
        points.push_back({i, j});
    }
    return make_coset_spec(n, std::move(points));
}

CosetSpec read_coset_spec_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_coset_spec(in);
}

void write_coset_spec(std::ostream& out, const CosetSpec& spec) {
    out << spec.n << '\n';
    for (auto [i, j] : spec.points) out << i << ' ' << j << '\n';
}

} // namespace supersat
