#include "regular7/mtable.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

#include "regular7/series.hpp"

namespace regular7 {

namespace {

const mpz_class kZero = 0;

// Printed base tables: (cofactor, power of 7) per column, rows 1..7,
// columns 1..14. Entries are cofactor * 7^power.
struct Cell {
    long cof;
    unsigned exp;
};
constexpr Cell kBaseTable[7][14] = {
    {{1, 1},  {1, 2},    {0, 0},     {0, 0},      {0, 0},      {0, 0},      {0, 0},
     {0, 0},  {0, 0},    {0, 0},     {0, 0},      {0, 0},      {0, 0},      {0, 0}},
    {{10, 0}, {9, 2},    {2, 4},     {1, 5},      {0, 0},      {0, 0},      {0, 0},
     {0, 0},  {0, 0},    {0, 0},     {0, 0},      {0, 0},      {0, 0},      {0, 0}},
    {{3, 0},  {114, 1},  {85, 3},    {24, 5},     {3, 7},      {1, 8},      {0, 0},
     {0, 0},  {0, 0},    {0, 0},     {0, 0},      {0, 0},      {0, 0},      {0, 0}},
    {{0, 0},  {82, 1},   {176, 3},   {845, 4},    {272, 6},    {46, 8},     {4, 10},
     {1, 11}, {0, 0},    {0, 0},     {0, 0},      {0, 0},      {0, 0},      {0, 0}},
    {{0, 0},  {190, 0},  {1265, 2},  {1895, 4},   {1233, 6},   {3025, 7},   {620, 9},
     {75, 11},{5, 13},   {1, 14},    {0, 0},      {0, 0},      {0, 0},      {0, 0}},
    {{0, 0},  {27, 0},   {736, 2},   {16782, 3},  {20424, 5},  {12825, 7},  {4770, 9},
     {7830, 10},{1178, 12},{111, 14},{6, 16},     {1, 17},     {0, 0},      {0, 0}},
    {{0, 0},  {1, 0},    {253, 2},   {1902, 4},   {4246, 6},   {31540, 7},  {19302, 9},
     {7501, 11},{1944, 13},{2397, 14},{285, 16},  {22, 18},    {1, 20},     {1, 20}},
};

mpz_class cell_value(const Cell& c) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 7, c.exp);
    return c.cof * p;
}

}  // namespace

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::fixture: return "fixture";
        case Provenance::recurrence: return "recurrence";
        case Provenance::oracle: return "oracle";
    }
    return "unknown";
}

MTable MTable::fixture_rows() {
    MTable t;
    for (int i = 1; i <= 7; ++i) {
        Row r;
        r.prov = Provenance::fixture;
        r.c.resize(static_cast<size_t>(support_bound(i)));
        for (int j = 1; j <= 14 && j <= support_bound(i); ++j)
            r.c[static_cast<size_t>(j - 1)] = cell_value(kBaseTable[i - 1][j - 1]);
        t.rows_.push_back(std::move(r));
    }
    return t;
}

MTable MTable::oracle_base(int base_rows) {
    if (base_rows < 1) throw std::invalid_argument("oracle_base: need at least one row");
    MTable t;
    for (int i = 1; i <= base_rows; ++i) {
        Row r;
        r.prov = Provenance::oracle;
        long jmax = support_bound(i);
        r.c = oracle_row(i, jmax, 7 * (jmax + 1) + 2, /*require_exhausted=*/true);
        t.rows_.push_back(std::move(r));
    }
    return t;
}

const mpz_class& MTable::entry(int i, long j) const {
    if (i < 1 || i > max_row()) throw std::out_of_range("MTable::entry: row not materialized");
    if (j < 1) throw std::out_of_range("MTable::entry: column must be >= 1");
    const auto& c = rows_[static_cast<size_t>(i - 1)].c;
    if (j > static_cast<long>(c.size())) return kZero;
    return c[static_cast<size_t>(j - 1)];
}

Provenance MTable::row_provenance(int i) const {
    if (i < 1 || i > max_row()) throw std::out_of_range("MTable::row_provenance: row absent");
    return rows_[static_cast<size_t>(i - 1)].prov;
}

std::span<const mpz_class> MTable::row(int i) const {
    if (i < 1 || i > max_row()) throw std::out_of_range("MTable::row: row absent");
    return rows_[static_cast<size_t>(i - 1)].c;
}

std::vector<mpz_class> MTable::recurrence_row(
    int i, const std::function<const mpz_class&(int, long)>& at) {
    // m_{i,j} = 7 m_{i-3,j-1} + 35 m_{i-2,j-1} + 49 m_{i-1,j-1}
    //         + m_{i-7,j-2} + 7 m_{i-6,j-2} + 21 m_{i-5,j-2} + 49 m_{i-4,j-2}
    //         + 147 m_{i-3,j-2} + 343 m_{i-2,j-2} + 343 m_{i-1,j-2}
    std::vector<mpz_class> row(static_cast<size_t>(support_bound(i)));
    for (long j = 3; j <= support_bound(i); ++j) {
        mpz_class& m = row[static_cast<size_t>(j - 1)];
        auto acc = [&](unsigned long coef, int di, long dj) {
            const mpz_class& v = at(i - di, j - dj);
            if (v != 0) mpz_addmul_ui(m.get_mpz_t(), v.get_mpz_t(), coef);
        };
        acc(7, 3, 1);
        acc(35, 2, 1);
        acc(49, 1, 1);
        acc(1, 7, 2);
        acc(7, 6, 2);
        acc(21, 5, 2);
        acc(49, 4, 2);
        acc(147, 3, 2);
        acc(343, 2, 2);
        acc(343, 1, 2);
    }
    return row;
}

void MTable::ensure_rows(int target_row) {
    if (max_row() < 7)
        throw std::logic_error("MTable::ensure_rows: base rows 1..7 must be present");
    auto at = [this](int i, long j) -> const mpz_class& { return entry(i, j); };
    for (int i = max_row() + 1; i <= target_row; ++i) {
        Row r;
        r.prov = Provenance::recurrence;
        r.c = recurrence_row(i, at);
        rows_.push_back(std::move(r));
    }
}

void MTable::wave(int target_row,
                  const std::function<void(int, std::span<const mpz_class>)>& visit) const {
    if (max_row() < 7)
        throw std::logic_error("MTable::wave: base rows 1..7 must be present");
    for (int i = 1; i <= std::min(target_row, max_row()); ++i)
        visit(i, rows_[static_cast<size_t>(i - 1)].c);
    if (target_row <= max_row()) return;

    // Rolling window: the recurrence needs the previous seven rows only.
    std::deque<std::pair<int, std::vector<mpz_class>>> window;
    for (int i = std::max(1, max_row() - 6); i <= max_row(); ++i)
        window.emplace_back(i, std::vector<mpz_class>(rows_[static_cast<size_t>(i - 1)].c));
    auto at = [&window](int i, long j) -> const mpz_class& {
        for (const auto& [wi, wc] : window)
            if (wi == i)
                return (j >= 1 && j <= static_cast<long>(wc.size()))
                           ? wc[static_cast<size_t>(j - 1)]
                           : kZero;
        throw std::logic_error("MTable::wave: row fell out of window");
    };
    for (int i = max_row() + 1; i <= target_row; ++i) {
        std::vector<mpz_class> r = recurrence_row(i, at);
        visit(i, r);
        window.emplace_back(i, std::move(r));
        if (window.size() > 7) window.pop_front();
    }
}

std::vector<mpz_class> oracle_row(int i, long j_max, long prec, bool require_exhausted) {
    if (i < 1) throw std::invalid_argument("oracle_row: i must be >= 1");
    if (j_max < 1) throw std::invalid_argument("oracle_row: j_max must be >= 1");
    if (prec < 7 * j_max + 1)
        throw std::invalid_argument("oracle_row: prec must be >= 7*j_max + 1");

    // H(xi^{-i}) with xi^{-i} = q^{2i} f_49^i / f_1^i.
    Series S = huff(expand_to({2L * i, {{49, i}, {1, -i}}}, prec));
    std::vector<mpz_class> out;
    out.reserve(static_cast<size_t>(j_max));
    for (long j = 1; j <= j_max; ++j) {
        mpz_class m = S.coeff(7 * j);
        if (m != 0) {
            // T^{-j} = q^{7j} f_49^{4j} / f_7^{4j} starts at q^{7j}: peeling
            // it cannot disturb the columns already extracted.
            S = sub(S, scaled(m, expand_to({7 * j, {{49, 4 * j}, {7, -4 * j}}}, S.prec())));
        }
        out.push_back(std::move(m));
    }
    long low = S.lowest_nonzero();
    long limit = require_exhausted ? S.prec() : std::min(S.prec(), 7 * j_max + 1);
    if (low < limit) {
        std::ostringstream os;
        os << "oracle_row(" << i << "): residual has support at q^" << low
           << " after peeling " << j_max << " terms";
        throw std::runtime_error(os.str());
    }
    return out;
}

mpz_class recurrence_entry(int i, long j, const MTable& base) {
    if (i < 8) throw std::invalid_argument("recurrence_entry: defined for i >= 8");
    if (j < 1) throw std::invalid_argument("recurrence_entry: column must be >= 1");
    if (base.max_row() < i - 1)
        throw std::out_of_range("recurrence_entry: rows i-7..i-1 not materialized");
    if (j <= 2) return 0;  // m_{i,1} = 0 for i >= 4 and m_{i,2} = 0 for i >= 8
    mpz_class m;
    auto acc = [&](unsigned long coef, int di, long dj) {
        const mpz_class& v = base.entry(i - di, j - dj);
        if (v != 0) mpz_addmul_ui(m.get_mpz_t(), v.get_mpz_t(), coef);
    };
    acc(7, 3, 1);
    acc(35, 2, 1);
    acc(49, 1, 1);
    acc(1, 7, 2);
    acc(7, 6, 2);
    acc(21, 5, 2);
    acc(49, 4, 2);
    acc(147, 3, 2);
    acc(343, 2, 2);
    acc(343, 1, 2);
    return m;
}

long pmij_bound(int i, long j) { return floor_div(7 * j - 2 * i - 1, 4); }

VerificationReport check_pmij(const MTable& table) {
    VerificationReport r;
    r.case_id = "pmij";
    r.params["rows"] = std::to_string(table.max_row());
    std::ostringstream range;
    range << "all entries, rows 1.." << table.max_row();
    r.range_checked = range.str();
    for (int i = 1; i <= table.max_row(); ++i) {
        for (long j = 1; j <= MTable::support_bound(i); ++j) {
            const mpz_class& v = table.entry(i, j);
            long bound = pmij_bound(i, j);
            if (bound <= 0) continue;  // vacuous
            Valuation val = pi7(v);
            if (!val.at_least(bound)) {
                std::ostringstream loc, want;
                loc << "m[" << i << "][" << j << "]=" << v.get_str();
                want << "pi >= " << bound;
                r.add_discrepancy(loc.str(), want.str(), "pi = " + val.to_string());
            }
        }
    }
    return r;
}

}  // namespace regular7
