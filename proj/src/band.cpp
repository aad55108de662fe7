#include "symband/band.hpp"

#include <charconv>
#include <cmath>

namespace symband {

Backend parse_backend(std::string_view s) {
    if (s == "exact") return Backend::Exact;
    if (s == "float") return Backend::Float;
    raise(ErrorKind::ParseError, "unknown backend '" + std::string(s) + "'");
}

void check_size(long long n, int w) {
    if (w < 1 || w > 3) raise(ErrorKind::SizeError, "half-bandwidth must be 1, 2 or 3, got " + std::to_string(w));
    if (n < 2LL * w + 1)
        raise(ErrorKind::SizeError,
              "n = " + std::to_string(n) + " too small for w = " + std::to_string(w) + " (needs n >= " +
                  std::to_string(2 * w + 1) + ")");
}

template <class T>
BandSystem<T>::BandSystem(std::size_t n, int w, StorageKind storage)
    : n_(n), w_(w), storage_(storage), rhs_(storage, n) {
    if (w < 1 || w > 3) raise(ErrorKind::SizeError, "half-bandwidth must be 1, 2 or 3, got " + std::to_string(w));
    if (n < static_cast<std::size_t>(w) + 1)
        raise(ErrorKind::SizeError, "n = " + std::to_string(n) + " leaves an empty diagonal for w = " +
                                        std::to_string(w));
    diags_.reserve(static_cast<std::size_t>(2 * w + 1));
    for (int o = -w; o <= w; ++o) diags_.emplace_back(storage, n - static_cast<std::size_t>(std::abs(o)));
}

template <class T>
BandSystem<T> BandSystem<T>::with_storage(StorageKind storage) const {
    BandSystem out(n_, w_, storage);
    for (int o = -w_; o <= w_; ++o) out.diag(o) = IndexedStore<T>::from_range(storage, diag(o).snapshot());
    out.rhs_ = IndexedStore<T>::from_range(storage, rhs_.snapshot());
    return out;
}

template <class T>
std::uint64_t BandSystem<T>::steps() const noexcept {
    std::uint64_t total = rhs_.steps();
    for (const auto& d : diags_) total += d.steps();
    return total;
}

template <class T>
void BandSystem<T>::reset_steps() noexcept {
    rhs_.reset_steps();
    for (auto& d : diags_) d.reset_steps();
}

template <class T>
std::vector<std::vector<T>> to_dense(const BandSystem<T>& sys) {
    const std::size_t n = sys.n();
    std::vector<std::vector<T>> m(n, std::vector<T>(n, T(0)));
    for (int o = -sys.w(); o <= sys.w(); ++o) {
        const auto values = sys.diag(o).snapshot();
        for (std::size_t k = 0; k < values.size(); ++k) {
            const std::size_t i = o >= 0 ? k : k + static_cast<std::size_t>(-o);
            const std::size_t j = o >= 0 ? k + static_cast<std::size_t>(o) : k;
            m[i][j] = values[k];
        }
    }
    return m;
}

template class BandSystem<Rational>;
template class BandSystem<double>;
template std::vector<std::vector<Rational>> to_dense(const BandSystem<Rational>&);
template std::vector<std::vector<double>> to_dense(const BandSystem<double>&);

namespace {

double parse_float(const std::string& s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(v)) return v;
    // Rational notation is accepted on the float backend too.
    return parse_rational(s).get_d();
}

template <class T>
T parse_entry(const std::string& s) {
    if constexpr (std::is_same_v<T, Rational>) return parse_rational(s);
    else return parse_float(s);
}

template <class T>
BandSystem<T> build_typed(const SystemText& text, StorageKind storage) {
    const auto n = static_cast<std::size_t>(text.n);
    const int w = text.w;
    if (text.diagonals.size() != static_cast<std::size_t>(2 * w + 1))
        raise(ErrorKind::ShapeError, "expected " + std::to_string(2 * w + 1) + " diagonals, got " +
                                         std::to_string(text.diagonals.size()));
    if (text.rhs.size() != n)
        raise(ErrorKind::ShapeError, "rhs has length " + std::to_string(text.rhs.size()) + ", expected " +
                                         std::to_string(n));
    BandSystem<T> sys(n, w, storage);
    for (int o = -w; o <= w; ++o) {
        const auto it = text.diagonals.find(o);
        if (it == text.diagonals.end()) raise(ErrorKind::ShapeError, "missing diagonal " + std::to_string(o));
        const std::size_t len = n - static_cast<std::size_t>(std::abs(o));
        if (it->second.size() != len)
            raise(ErrorKind::ShapeError, "diagonal " + std::to_string(o) + " has length " +
                                             std::to_string(it->second.size()) + ", expected " + std::to_string(len));
        std::vector<T> values;
        values.reserve(len);
        for (const auto& s : it->second) values.push_back(parse_entry<T>(s));
        sys.diag(o) = IndexedStore<T>::from_range(storage, values);
    }
    std::vector<T> rhs;
    rhs.reserve(n);
    for (const auto& s : text.rhs) rhs.push_back(parse_entry<T>(s));
    sys.rhs() = IndexedStore<T>::from_range(storage, rhs);
    return sys;
}

}  // namespace

AnySystem build_system(const SystemText& text, Backend backend, StorageKind storage) {
    check_size(text.n, text.w);
    if (backend == Backend::Exact) return build_typed<Rational>(text, storage);
    return build_typed<double>(text, storage);
}

ExactSystem build_exact(std::size_t n, int w, const std::map<int, std::vector<Rational>>& diagonals,
                        const std::vector<Rational>& rhs, StorageKind storage) {
    SystemText text;
    text.n = static_cast<long long>(n);
    text.w = w;
    for (const auto& [o, values] : diagonals) {
        auto& out = text.diagonals[o];
        for (const auto& v : values) out.push_back(to_string(v));
    }
    for (const auto& v : rhs) text.rhs.push_back(to_string(v));
    return std::get<ExactSystem>(build_system(text, Backend::Exact, storage));
}

FloatSystem to_float(const ExactSystem& sys) {
    FloatSystem out(sys.n(), sys.w(), sys.storage());
    for (int o = -sys.w(); o <= sys.w(); ++o) {
        std::vector<double> values;
        for (const auto& v : sys.diag(o).snapshot()) values.push_back(v.get_d());
        out.diag(o) = IndexedStore<double>::from_range(sys.storage(), values);
    }
    std::vector<double> rhs;
    for (const auto& v : sys.rhs().snapshot()) rhs.push_back(v.get_d());
    out.rhs() = IndexedStore<double>::from_range(sys.storage(), rhs);
    return out;
}

}  // namespace symband
