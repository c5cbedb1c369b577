#include "brauer/tensor.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <thread>
#include <unordered_map>

namespace brauer {

std::string flavor_name(Flavor f)
{
    switch (f) {
    case Flavor::symplectic: return "symplectic";
    case Flavor::orthogonal: return "orthogonal";
    case Flavor::symmetric: return "symmetric";
    }
    return "?";
}

std::optional<Flavor> parse_flavor(const std::string& s)
{
    if (s == "symplectic" || s == "sp") return Flavor::symplectic;
    if (s == "orthogonal" || s == "o") return Flavor::orthogonal;
    if (s == "symmetric" || s == "sym") return Flavor::symmetric;
    return std::nullopt;
}

long flavor_delta(Flavor f, int N)
{
    switch (f) {
    case Flavor::symplectic: return -2L * N;
    case Flavor::orthogonal: return N;
    case Flavor::symmetric: return N;
    }
    return 0;
}

// --- SparseMat ---

SparseMat SparseMat::identity(std::size_t dim)
{
    SparseMat m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.rows[i].emplace_back(std::uint32_t(i), 1);
    return m;
}

namespace {

void compress(SparseMat::Row& row, std::vector<std::int64_t>& acc, std::vector<std::uint32_t>& touched)
{
    std::sort(touched.begin(), touched.end());
    row.clear();
    for (auto c : touched) {
        if (acc[c]) row.emplace_back(c, acc[c]);
        acc[c] = 0;
    }
    touched.clear();
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("tensor matrix entry overflow");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("tensor matrix entry overflow");
    return out;
}

}  // namespace

SparseMat SparseMat::operator*(const SparseMat& o) const
{
    if (n != o.n) throw std::invalid_argument("SparseMat: size mismatch");
    SparseMat out(n);
    std::vector<std::int64_t> acc(n, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t i = 0; i < n; ++i) {
        for (auto [k, a] : rows[i])
            for (auto [j, b] : o.rows[k]) {
                if (!acc[j]) touched.push_back(j);
                acc[j] = checked_add(acc[j], checked_mul(a, b));
            }
        // an entry can cancel to zero and come back; dedupe the touched list
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        compress(out.rows[i], acc, touched);
    }
    return out;
}

SparseMat SparseMat::operator+(const SparseMat& o) const
{
    if (n != o.n) throw std::invalid_argument("SparseMat: size mismatch");
    SparseMat out(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& a = rows[i];
        auto& b = o.rows[i];
        std::size_t x = 0, y = 0;
        while (x < a.size() || y < b.size()) {
            if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
                out.rows[i].push_back(a[x++]);
            } else if (x == a.size() || b[y].first < a[x].first) {
                out.rows[i].push_back(b[y++]);
            } else {
                std::int64_t v = checked_add(a[x].second, b[y].second);
                if (v) out.rows[i].emplace_back(a[x].first, v);
                ++x, ++y;
            }
        }
    }
    return out;
}

SparseMat SparseMat::scaled(std::int64_t c) const
{
    SparseMat out(n);
    if (!c) return out;
    for (std::size_t i = 0; i < n; ++i)
        for (auto [j, v] : rows[i]) out.rows[i].emplace_back(j, checked_mul(v, c));
    return out;
}

SparseMat SparseMat::transpose() const
{
    SparseMat out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (auto [j, v] : rows[i]) out.rows[j].emplace_back(std::uint32_t(i), v);
    return out;
}

std::int64_t SparseMat::get(std::size_t i, std::size_t j) const
{
    for (auto [c, v] : rows.at(i))
        if (c == j) return v;
    return 0;
}

bool SparseMat::is_zero() const
{
    for (auto& r : rows)
        if (!r.empty()) return false;
    return true;
}

std::size_t SparseMat::nnz() const
{
    std::size_t k = 0;
    for (auto& r : rows) k += r.size();
    return k;
}

// --- words ---

const std::vector<int>& diagram_word(const Diagram& d)
{
    static std::mutex mu;
    static std::map<int, std::unordered_map<std::uint64_t, std::vector<int>>> words;
    std::lock_guard<std::mutex> lock(mu);
    int r = d.r();
    auto it = words.find(r);
    if (it == words.end()) {
        auto& w = words[r];
        w[Diagram(r).code()] = {};
        std::deque<Diagram> queue{Diagram(r)};
        while (!queue.empty()) {
            Diagram cur = queue.front();
            queue.pop_front();
            for (int i = 1; i < r; ++i)
                for (int g : {i, -i}) {
                    Diagram gen = g > 0 ? Diagram::s(r, i) : Diagram::e(r, i);
                    auto [next, loops] = diagram_mult(cur, gen);
                    if (loops || w.count(next.code())) continue;
                    auto word = w[cur.code()];
                    word.push_back(g);
                    w[next.code()] = std::move(word);
                    queue.push_back(next);
                }
        }
        if (long(w.size()) != double_factorial_odd(r)) throw std::logic_error("diagram_word: BFS missed diagrams");
        it = words.find(r);
    }
    return it->second.at(d.code());
}

// --- TensorRep ---

TensorRep::TensorRep(Flavor f, int N, int r, std::size_t max_dim) : flavor_(f), N_(N), r_(r)
{
    if (N < 1 || r < 1 || r > kMaxStrands) throw std::invalid_argument("TensorRep: need N >= 1 and 1 <= r <= 8");
    dimv_ = f == Flavor::symplectic ? 2 * N : N;
    long double total = 1;
    for (int k = 0; k < r; ++k) total *= dimv_;
    if (total > (long double)max_dim)
        throw CapExceeded("tensor space of dimension " + std::to_string((long long)total) + " exceeds the cap " +
                          std::to_string(max_dim));
    dim_ = std::size_t(total);

    for (int i = 1; i < r; ++i) {
        SparseMat e(dim_), s(dim_);
        for (std::size_t x = 0; x < dim_; ++x) {
            auto dg = digits(x);
            auto sw = dg;
            std::swap(sw[i - 1], sw[i]);
            s.rows[x].emplace_back(std::uint32_t(index(sw)), epsilon());
            if (f == Flavor::symmetric) continue;
            int c = form(dg[i - 1], dg[i]);
            if (!c) continue;
            auto out = dg;
            for (int k = 0; k < dimv_; ++k) {
                auto [kk, cc] = dual(k);
                out[i - 1] = kk, out[i] = k;
                e.rows[x].emplace_back(std::uint32_t(index(out)), std::int64_t(c) * cc);
            }
            std::sort(e.rows[x].begin(), e.rows[x].end());
        }
        e_.push_back(std::move(e));
        s_.push_back(std::move(s));
    }
}

int TensorRep::form(int i, int j) const
{
    if (flavor_ == Flavor::symplectic) {
        if (i + j != 2 * N_ - 1) return 0;
        return i < N_ ? 1 : -1;
    }
    return i + j == N_ - 1 ? 1 : 0;
}

std::pair<int, int> TensorRep::dual(int i) const
{
    if (flavor_ == Flavor::symplectic) return {2 * N_ - 1 - i, i < N_ ? 1 : -1};
    return {N_ - 1 - i, 1};
}

std::vector<int> TensorRep::digits(std::size_t x) const
{
    std::vector<int> d(r_);
    for (int p = r_ - 1; p >= 0; --p) {
        d[p] = int(x % dimv_);
        x /= dimv_;
    }
    return d;
}

std::size_t TensorRep::index(const std::vector<int>& d) const
{
    std::size_t x = 0;
    for (int v : d) x = x * dimv_ + v;
    return x;
}

const SparseMat& TensorRep::diagram(const Diagram& d) const
{
    if (d.r() != r_) throw std::invalid_argument("TensorRep: diagram has the wrong number of strands");
    if (flavor_ == Flavor::symmetric && !d.is_permutation())
        throw std::invalid_argument("TensorRep: the symmetric flavor only represents permutations");
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(d.code());
        if (it != cache_.end()) return *it->second;
    }
    const auto& word = diagram_word(d);
    std::shared_ptr<const SparseMat> m;
    if (word.empty()) {
        m = std::make_shared<const SparseMat>(SparseMat::identity(dim_));
    } else {
        // the prefix of a BFS word is the word of the parent diagram
        Diagram parent(r_);
        for (std::size_t k = 0; k + 1 < word.size(); ++k) {
            int h = word[k];
            parent = diagram_mult(parent, h > 0 ? Diagram::s(r_, h) : Diagram::e(r_, -h)).first;
        }
        int g = word.back();
        const SparseMat& pm = diagram(parent);
        m = std::make_shared<const SparseMat>(pm * (g > 0 ? gen_s(g) : gen_e(-g)));
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = cache_.emplace(d.code(), std::move(m));
    return *it->second;
}

SparseMat TensorRep::closed_form(const Diagram& d) const
{
    if (d.r() != r_) throw std::invalid_argument("TensorRep: diagram has the wrong number of strands");
    std::vector<std::pair<int, int>> top, bottom, vertical;
    for (auto [a, b] : d.pairs()) {
        int i = a - 1, j = b - 1;
        if (j < r_)
            top.emplace_back(i, j);
        else if (i >= r_)
            bottom.emplace_back(i - r_, j - r_);
        else
            vertical.emplace_back(i, j - r_);
    }
    if (flavor_ == Flavor::symmetric && !top.empty())
        throw std::invalid_argument("TensorRep: the symmetric flavor only represents permutations");
    std::int64_t sign = 1;
    if (flavor_ == Flavor::symplectic && d.length() % 2) sign = -1;

    SparseMat m(dim_);
    std::size_t combos = 1;
    for (std::size_t k = 0; k < bottom.size(); ++k) combos *= dimv_;
    std::vector<int> out(r_);
    for (std::size_t x = 0; x < dim_; ++x) {
        auto in = digits(x);
        std::int64_t c = sign;
        for (auto [i, j] : top) c *= form(in[i], in[j]);
        if (!c) continue;
        for (auto [i, j] : vertical) out[j] = in[i];
        for (std::size_t combo = 0; combo < combos; ++combo) {
            std::int64_t cc = c;
            std::size_t rest = combo;
            for (auto [i, j] : bottom) {
                int k = int(rest % dimv_);
                rest /= dimv_;
                auto [kk, coef] = dual(k);
                out[i] = kk, out[j] = k;
                cc *= coef;
            }
            m.rows[x].emplace_back(std::uint32_t(index(out)), cc);
        }
        std::sort(m.rows[x].begin(), m.rows[x].end());
    }
    return m;
}

SparseMat TensorRep::element(const Element<Int>& a) const
{
    SparseMat m(dim_);
    for (std::size_t k = 0; k < a.size(); ++k) {
        const Int& c = a.terms()[k].second;
        if (!c.fits_slong_p()) throw std::overflow_error("TensorRep::element: coefficient too large");
        m = m + diagram(a.diagram(k)).scaled(c.get_si());
    }
    return m;
}

SparseVec<Int> TensorRep::image(const Element<Int>& a) const
{
    std::unordered_map<std::uint64_t, Int> acc;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const Int& c = a.terms()[k].second;
        const SparseMat& m = diagram(a.diagram(k));
        for (std::size_t i = 0; i < dim_; ++i)
            for (auto [j, v] : m.rows[i]) {
                Int& slot = acc[std::uint64_t(i) * dim_ + j];
                slot += c * v;
            }
    }
    SparseVec<Int> out;
    for (auto& [key, v] : acc)
        if (v != 0) out.emplace_back(key, v);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

// --- rank ---

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& f)
{
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (std::size_t t = 0; t < std::min<std::size_t>(jobs, n); ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < n;) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

std::size_t image_rank(const std::vector<Element<Int>>& gens, const TensorRep& rep, long p, std::size_t stop_at,
                       int jobs)
{
    // images are computed in parallel batches and added in order, so the
    // result does not depend on the thread count
    const std::size_t batch = std::max<std::size_t>(1, std::size_t(std::max(jobs, 1)) * 4);
    Echelon<Int> ez;
    Echelon<Fp> ep;
    auto rank = [&] { return p ? ep.rank() : ez.rank(); };
    for (std::size_t start = 0; start < gens.size() && rank() < stop_at; start += batch) {
        std::size_t end = std::min(gens.size(), start + batch);
        std::vector<SparseVec<Int>> imgs(end - start);
        parallel_for(end - start, jobs, [&](std::size_t k) { imgs[k] = rep.image(gens[start + k]); });
        for (auto& v : imgs) {
            if (rank() >= stop_at) break;
            if (p) {
                SparseVec<Fp> w;
                for (auto& [key, c] : v) {
                    long m = long(mpz_fdiv_ui(c.get_mpz_t(), (unsigned long)p));
                    if (m) w.emplace_back(key, Fp(m, p));
                }
                ep.add(std::move(w));
            } else {
                ez.add(std::move(v));
            }
        }
    }
    return rank();
}

// --- functionals ---

Int diagram_pfaffian(const std::vector<std::vector<Int>>& a)
{
    if (a.size() % 2) throw std::invalid_argument("diagram_pfaffian: odd size");
    int r = int(a.size() / 2);
    Int total = 0;
    for (auto& d : all_diagrams(r)) {
        Int term = d.sign();
        for (auto [i, j] : d.pairs()) {
            term *= a[i - 1][j - 1];
            if (term == 0) break;
        }
        total += term;
    }
    return total;
}

Int pfaffian_functional(int r, int N, const std::vector<int>& x)
{
    if (int(x.size()) != 2 * r) throw std::invalid_argument("pfaffian_functional: need 2r vectors");
    TensorRep rep(Flavor::symplectic, N, 1);
    std::vector<std::vector<Int>> a(2 * r, std::vector<Int>(2 * r));
    for (int i = 0; i < 2 * r; ++i)
        for (int j = 0; j < 2 * r; ++j) a[i][j] = rep.form(x[i], x[j]);
    return diagram_pfaffian(a);
}

Int walled_minor(int a, int b, const std::vector<std::vector<Int>>& w)
{
    int r = a + b;
    if (int(w.size()) != 2 * r) throw std::invalid_argument("walled_minor: need a 2r x 2r matrix");
    Int total = 0;
    for (auto& d : all_diagrams(r)) {
        auto info = walled_filter(a, b, d);
        if (!info.walled) continue;
        Int term = info.sign;
        for (auto [i, j] : d.pairs()) term *= w[i - 1][j - 1];
        total += term;
    }
    return total;
}

}  // namespace brauer
