#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "band_helpers.hpp"
#include "symband/band.hpp"

using namespace symband;

namespace {
ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::DomainError;
}

SystemText tridiagonal_text() {
    SystemText t;
    t.n = 3;
    t.w = 1;
    t.diagonals[-1] = {"1", "1"};
    t.diagonals[0] = {"2", "2", "2"};
    t.diagonals[1] = {"1", "1"};
    t.rhs = {"1", "1", "1"};
    return t;
}
}  // namespace

TEST_CASE("build_system accepts a valid tridiagonal system") {
    for (auto storage : {StorageKind::Fixed, StorageKind::List}) {
        const AnySystem any = build_system(tridiagonal_text(), Backend::Exact, storage);
        const auto& sys = std::get<ExactSystem>(any);
        CHECK(sys.n() == 3);
        CHECK(sys.w() == 1);
        CHECK(sys.storage() == storage);
        CHECK(sys.a(0, 0) == 2);
        CHECK(sys.a(1, 0) == 1);
        CHECK(sys.a(1, 2) == 1);
        CHECK(sys.b(2) == 1);
    }
    const auto f = std::get<FloatSystem>(build_system(tridiagonal_text(), Backend::Float, StorageKind::Fixed));
    CHECK(f.a(2, 2) == 2.0);
}

TEST_CASE("build_system shape, size and parse errors") {
    SystemText t = tridiagonal_text();
    t.diagonals[0] = {"2", "2"};
    CHECK(kind_of([&] { (void)build_system(t, Backend::Exact, StorageKind::Fixed); }) == ErrorKind::ShapeError);

    t = tridiagonal_text();
    t.diagonals.erase(1);
    CHECK(kind_of([&] { (void)build_system(t, Backend::Exact, StorageKind::Fixed); }) == ErrorKind::ShapeError);

    t = tridiagonal_text();
    t.rhs.pop_back();
    CHECK(kind_of([&] { (void)build_system(t, Backend::Exact, StorageKind::Fixed); }) == ErrorKind::ShapeError);

    t = tridiagonal_text();
    t.diagonals[0][1] = "2/x";
    CHECK(kind_of([&] { (void)build_system(t, Backend::Exact, StorageKind::Fixed); }) == ErrorKind::ParseError);
    t.diagonals[0][1] = "nan";
    CHECK(kind_of([&] { (void)build_system(t, Backend::Float, StorageKind::Fixed); }) == ErrorKind::ParseError);

    SystemText h;
    h.n = 6;
    h.w = 3;
    CHECK(kind_of([&] { (void)build_system(h, Backend::Exact, StorageKind::Fixed); }) == ErrorKind::SizeError);
}

TEST_CASE("store_access charges steps by storage class") {
    IndexedStore<int> fixed(StorageKind::Fixed, 10, 7);
    IndexedStore<int> list(StorageKind::List, 10, 7);
    (void)fixed.get(5);
    (void)list.get(5);
    CHECK(fixed.steps() == 1);
    CHECK(list.steps() == 6);

    IndexedStore<int> short_list(StorageKind::List, 4);
    CHECK(kind_of([&] { (void)short_list.get(4); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([&] { short_list.set(9, 1); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("fixed stores cannot grow, list stores grow by append") {
    IndexedStore<int> fixed(StorageKind::Fixed, 3);
    CHECK(kind_of([&] { fixed.append(1); }) == ErrorKind::ShapeError);
    IndexedStore<int> list(StorageKind::List);
    for (int v = 0; v < 5; ++v) list.append(v * v);
    CHECK(list.size() == 5);
    CHECK(list.get(4) == 16);
    IndexedStore<int> copy = list;
    copy.append(25);
    CHECK(copy.get(5) == 25);
    CHECK(list.size() == 5);
}

TEST_CASE("full sequential sweep costs L and L(L+1)/2") {
    for (std::size_t len : {1u, 2u, 17u, 300u}) {
        IndexedStore<long> fixed(StorageKind::Fixed, len);
        IndexedStore<long> list(StorageKind::List, len);
        for (std::size_t i = 0; i < len; ++i) {
            (void)fixed.get(i);
            (void)list.get(i);
        }
        CHECK(fixed.steps() == len);
        CHECK(list.steps() == len * (len + 1) / 2);
    }
}

TEST_CASE("backends return identical values for random access sequences") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t len = 1 + rng() % 40;
        IndexedStore<long> fixed(StorageKind::Fixed, len);
        IndexedStore<long> list(StorageKind::List, len);
        std::uint64_t expected_list_steps = 0;
        for (int op = 0; op < 200; ++op) {
            const std::size_t i = rng() % len;
            expected_list_steps += i + 1;
            if (rng() % 2) {
                const long v = static_cast<long>(rng() % 1000);
                fixed.set(i, v);
                list.set(i, v);
            } else {
                REQUIRE(fixed.get(i) == list.get(i));
            }
        }
        CHECK(fixed.steps() == 200);
        CHECK(list.steps() == expected_list_steps);
        CHECK(fixed.snapshot() == list.snapshot());
    }
}

TEST_CASE("with_storage preserves contents") {
    const auto sys = std::get<ExactSystem>(build_system(tridiagonal_text(), Backend::Exact, StorageKind::Fixed));
    const ExactSystem list = sys.with_storage(StorageKind::List);
    CHECK(list.storage() == StorageKind::List);
    CHECK(to_dense(list) == to_dense(sys));
    CHECK(list.rhs().snapshot() == sys.rhs().snapshot());
}
