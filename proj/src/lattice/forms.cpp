#include "quintics/lattice/forms.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>

namespace quintics {
namespace detail {
const std::map<std::string, std::string>& embedded_lattice_tables();
}

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

void require_same_form(const DivisorClass& a, const DivisorClass& b) {
    if (a.form != b.form || a.coeffs.size() != b.coeffs.size())
        throw LatticeError("classes '" + a.name + "' and '" + b.name + "' live on different forms");
}

}  // namespace

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    require_same_form(*this, o);
    DivisorClass r{name + " + " + o.name, form, coeffs};
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    require_same_form(*this, o);
    DivisorClass r{name + " - " + o.name, form, coeffs};
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
    return r;
}

DivisorClass DivisorClass::operator-() const { return scaled(-1); }

DivisorClass DivisorClass::scaled(long long k) const {
    DivisorClass r{std::to_string(k) + "(" + name + ")", form, coeffs};
    for (auto& c : r.coeffs) c *= k;
    return r;
}

bool DivisorClass::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; });
}

DivisorClass operator*(long long k, const DivisorClass& d) { return d.scaled(k); }

IntersectionForm IntersectionForm::parse(std::string_view text) {
    IntersectionForm f;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    auto fail = [&](const std::string& why) { throw LatticeError("line " + std::to_string(line_no) + ": " + why); };
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        const auto w = words(line);
        if (w[0] == "triple" || w[0] == "surface") {
            if (f.arity_ != 0 || w.size() != 2) fail("form header must appear once as 'triple NAME' or 'surface NAME'");
            f.arity_ = w[0] == "triple" ? 3 : 2;
            f.name_ = w[1];
        } else if (w[0] == "basis") {
            if (f.arity_ == 0) fail("basis before form header");
            if (!f.basis_.empty()) fail("basis given twice");
            f.basis_.assign(w.begin() + 1, w.end());
            if (f.basis_.empty()) fail("empty basis");
            std::vector<std::string> sorted = f.basis_;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("repeated generator");
            std::size_t size = 1;
            for (int k = 0; k < f.arity_; ++k) size *= f.basis_.size();
            f.table_.assign(size, std::nullopt);
        } else if (w[0] == "class") {
            const auto eq = line.find('=');
            if (f.basis_.empty() || eq == std::string::npos || w.size() < 4) fail("expected 'class NAME = combination'");
            const std::string cname = w[1];
            if (f.classes_.count(cname) || std::count(f.basis_.begin(), f.basis_.end(), cname)) fail("class name '" + cname + "' already used");
            try {
                f.classes_.emplace(cname, f.combination(line.substr(eq + 1), cname));
            } catch (const LatticeError& e) {
                fail(e.what());
            }
        } else {
            if (f.basis_.empty()) fail("entry before basis");
            const auto eq = std::find(w.begin(), w.end(), "=");
            if (eq == w.end() || eq + 2 != w.end() || eq - w.begin() != f.arity_) fail("expected " + std::to_string(f.arity_) + " generators, '=' and an integer");
            std::vector<std::size_t> idx;
            for (auto it = w.begin(); it != eq; ++it) {
                const auto pos = std::find(f.basis_.begin(), f.basis_.end(), *it);
                if (pos == f.basis_.end()) fail("unknown generator '" + *it + "'");
                idx.push_back(static_cast<std::size_t>(pos - f.basis_.begin()));
            }
            long long value = 0;
            std::size_t used = 0;
            try {
                value = std::stoll(*(eq + 1), &used);
            } catch (const std::exception&) {
                fail("bad integer '" + *(eq + 1) + "'");
            }
            if (used != (eq + 1)->size()) fail("bad integer '" + *(eq + 1) + "'");
            // fill every permutation; a conflicting restatement is an error
            std::sort(idx.begin(), idx.end());
            do {
                auto& slot = f.table_[f.flat(idx)];
                if (slot && *slot != value) fail("entry restated with a different value");
                slot = value;
            } while (std::next_permutation(idx.begin(), idx.end()));
        }
    }
    if (f.arity_ == 0 || f.basis_.empty()) throw LatticeError("missing form header or basis");
    return f;
}

IntersectionForm IntersectionForm::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw LatticeError("cannot read " + file.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse(ss.str());
    } catch (const LatticeError& e) {
        throw LatticeError(file.string() + ": " + e.what());
    }
}

std::size_t IntersectionForm::flat(const std::vector<std::size_t>& idx) const {
    std::size_t k = 0;
    for (auto i : idx) k = k * basis_.size() + i;
    return k;
}

std::size_t IntersectionForm::index_of(const std::string& g) const {
    const auto pos = std::find(basis_.begin(), basis_.end(), g);
    if (pos == basis_.end()) throw LatticeError("form '" + name_ + "' has no generator '" + g + "'");
    return static_cast<std::size_t>(pos - basis_.begin());
}

std::optional<long long> IntersectionForm::entry(const std::vector<std::size_t>& idx) const {
    if (static_cast<int>(idx.size()) != arity_) throw LatticeError("wrong number of indices");
    for (auto i : idx)
        if (i >= basis_.size()) throw LatticeError("index out of range");
    return table_[flat(idx)];
}

bool IntersectionForm::is_symmetric() const {
    const std::size_t n = basis_.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(arity_), 0);
    for (std::size_t k = 0; k < table_.size(); ++k) {
        std::size_t r = k;
        for (int j = arity_ - 1; j >= 0; --j) {
            idx[static_cast<std::size_t>(j)] = r % n;
            r /= n;
        }
        std::vector<std::size_t> perm = idx;
        std::sort(perm.begin(), perm.end());
        do {
            if (table_[flat(perm)] != table_[k]) return false;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return true;
}

std::size_t IntersectionForm::known_entries() const {
    return static_cast<std::size_t>(std::count_if(table_.begin(), table_.end(), [](const auto& e) { return e.has_value(); }));
}

DivisorClass IntersectionForm::zero() const { return {"0", name_, std::vector<long long>(basis_.size(), 0)}; }

DivisorClass IntersectionForm::generator(const std::string& g) const {
    DivisorClass d = zero();
    d.name = g;
    d.coeffs[index_of(g)] = 1;
    return d;
}

DivisorClass IntersectionForm::named(const std::string& n) const {
    if (auto it = classes_.find(n); it != classes_.end()) return it->second;
    return generator(n);
}

DivisorClass IntersectionForm::combination(std::string_view expr, std::string name) const {
    static const std::regex term(R"(\s*([+-])?\s*(\d*)\s*\*?\s*([A-Za-z_][A-Za-z0-9_']*)\s*)");
    DivisorClass d = zero();
    d.name = name.empty() ? trim(expr) : std::move(name);
    const std::string s(expr);
    auto it = s.cbegin();
    bool first = true;
    std::smatch m;
    while (it != s.cend()) {
        if (!std::regex_search(it, s.cend(), m, term, std::regex_constants::match_continuous)) throw LatticeError("cannot parse class '" + s + "'");
        if (!first && !m[1].matched) throw LatticeError("missing sign in '" + s + "'");
        long long k = m[2].length() ? std::stoll(m[2].str()) : 1;
        if (m[1].matched && m[1].str() == "-") k = -k;
        const DivisorClass part = named(m[3].str());
        for (std::size_t i = 0; i < d.coeffs.size(); ++i) d.coeffs[i] += k * part.coeffs[i];
        it = m[0].second;
        first = false;
    }
    if (first) throw LatticeError("empty class expression");
    return d;
}

long long IntersectionForm::product(const std::vector<DivisorClass>& ds) const {
    if (static_cast<int>(ds.size()) != arity_)
        throw LatticeError("form '" + name_ + "' takes " + std::to_string(arity_) + " classes, got " + std::to_string(ds.size()));
    for (const auto& d : ds)
        if (d.form != name_ || d.coeffs.size() != basis_.size())
            throw LatticeError("class '" + d.name + "' is not on form '" + name_ + "'");
    const std::size_t n = basis_.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(arity_), 0);
    long long total = 0;
    for (std::size_t k = 0; k < table_.size(); ++k) {
        std::size_t r = k;
        long long weight = 1;
        for (int j = arity_ - 1; j >= 0; --j) {
            idx[static_cast<std::size_t>(j)] = r % n;
            r /= n;
        }
        for (int j = 0; j < arity_; ++j) weight *= ds[static_cast<std::size_t>(j)].coeffs[idx[static_cast<std::size_t>(j)]];
        if (weight == 0) continue;
        if (!table_[k]) {
            std::string slot;
            for (auto i : idx) slot += (slot.empty() ? "" : " ") + basis_[i];
            throw LatticeError("product on '" + name_ + "' needs the unknown entry " + slot);
        }
        total += weight * *table_[k];
    }
    return total;
}

TripleForm::TripleForm(IntersectionForm f) : IntersectionForm(std::move(f)) {
    if (arity_ != 3) throw LatticeError("'" + name_ + "' is not a triple form");
    if (!is_symmetric()) throw LatticeError("'" + name_ + "' is not symmetric");
}

SurfaceForm::SurfaceForm(IntersectionForm f) : IntersectionForm(std::move(f)) {
    if (arity_ != 2) throw LatticeError("'" + name_ + "' is not a surface form");
    if (!is_symmetric()) throw LatticeError("'" + name_ + "' is not symmetric");
}

const std::vector<std::string>& lattice_table_files() {
    static const std::vector<std::string> files{"secant_bundle.txt", "resolved_secant.txt", "symmetric_square.txt", "abelian_blowup.txt"};
    return files;
}

std::string embedded_lattice_table(const std::string& file) {
    const auto& t = detail::embedded_lattice_tables();
    const auto it = t.find(file);
    if (it == t.end()) throw LatticeError("no embedded table '" + file + "'");
    return it->second;
}

LatticeTables load_lattice_tables(const std::filesystem::path& dir) {
    auto read = [&](const std::string& file) {
        return dir.empty() ? IntersectionForm::parse(embedded_lattice_table(file)) : IntersectionForm::load(dir / file);
    };
    const auto& f = lattice_table_files();
    return {TripleForm(read(f[0])), TripleForm(read(f[1])), SurfaceForm(read(f[2])), SurfaceForm(read(f[3])),
            dir.empty() ? std::string("embedded") : dir.string()};
}

}  // namespace quintics
