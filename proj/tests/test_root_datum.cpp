#include <doctest.h>

#include "taw/root_datum.hpp"

using namespace taw;

TEST_CASE("presets build and have the expected shape") {
  auto a1 = preset("A1");
  CHECK(a1.datum.num_positive == 1);
  CHECK(cartan_type_name(a1.datum.cartan()) == "A1");

  auto a2 = preset("A2");
  CHECK(a2.datum.num_positive == 3);
  CHECK(cartan_type_name(a2.datum.cartan()) == "A2");
  CHECK(a2.datum.two_rho == Vec{2, 2});  // 2(alpha1 + alpha2) in the weight basis

  auto c2 = preset("C2");
  CHECK(c2.datum.num_positive == 4);
  CHECK(c2.datum.two_rho == Vec{4, 2});

  auto a4 = preset("A4-fold");
  CHECK(a4.datum.num_positive == 10);
  CHECK(a4.aut.order == 2);
  CHECK(cartan_type_name(a4.datum.cartan()) == "A4");
}

TEST_CASE("reflections permute roots and pair correctly") {
  auto d = preset("C2").datum;
  for (const auto& rp : d.roots) CHECK(d.pair(rp.root, rp.coroot) == 2);
  for (size_t s = 0; s < d.roots.size(); ++s)
    for (size_t r = 0; r < d.roots.size(); ++r)
      CHECK(d.find_root(d.reflect_x(static_cast<int>(s), d.roots[r].root)) >= 0);
}

TEST_CASE("automorphism validation rejects a non-symmetry") {
  auto a2 = preset("A2");
  PinnedAutomorphism bad;
  bad.order = 2;
  bad.lattice_map = Mat(2, 2);
  bad.lattice_map(0, 0) = 1;
  bad.lattice_map(0, 1) = 1;
  bad.lattice_map(1, 1) = -1;
  bad.simple_root_permutation = {0, 1};
  CHECK_THROWS_AS(validate_automorphism(a2.datum, bad), validation_error);

  PinnedAutomorphism wrong_perm;
  wrong_perm.order = 2;
  wrong_perm.lattice_map = Mat(2, 2);
  wrong_perm.lattice_map(0, 1) = 1;
  wrong_perm.lattice_map(1, 0) = 1;
  wrong_perm.simple_root_permutation = {0, 1};  // the flip is (1, 0)
  // the A2 preset lives in the weight basis where the flip is the swap
  CHECK_THROWS_AS(validate_automorphism(a2.datum, wrong_perm), validation_error);
}

TEST_CASE("cartan type detection") {
  auto cart = [](std::initializer_list<std::initializer_list<Int>> rows) {
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (const auto& row : rows) {
      int j = 0;
      for (Int x : row) m(i, j++) = x;
      ++i;
    }
    return m;
  };
  CHECK(cartan_type_name(cart({{2}})) == "A1");
  CHECK(cartan_type_name(cart({{2, -1}, {-1, 2}})) == "A2");
  CHECK(cartan_type_name(cart({{2, -2}, {-1, 2}})) == "B2");
  CHECK(cartan_type_name(cart({{2, -1}, {-2, 2}})) == "B2");
  CHECK(cartan_type_name(cart({{2, -1}, {-3, 2}})) == "G2");
  CHECK(cartan_type_name(cart({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}})) == "B3");
  CHECK(cartan_type_name(cart({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}})) == "C3");
  CHECK(cartan_type_name(cart({{2, 0, 0}, {0, 2, -1}, {0, -1, 2}})) == "A1xA2");
  // affine matrix: not finite type
  CHECK_THROWS_AS(cartan_type_name(cart({{2, -2}, {-2, 2}})), validation_error);
  CHECK(cartan_type_name(cart({{2, -1, 0, 0},
                               {-1, 2, -1, -1},
                               {0, -1, 2, 0},
                               {0, -1, 0, 2}})) == "D4");
}

TEST_CASE("config ingestion round trip") {
  std::string cfg = R"({
    "name": "flip",
    "rank": 2,
    "pairing_matrix": [[1, 0], [0, 1]],
    "simple_roots": [[1, 0], [0, 1]],
    "simple_coroots": [[2, -1], [-1, 2]],
    "automorphism": {"order": 2, "lattice_map": [[0, 1], [1, 0]], "permutation": [1, 0]}
  })";
  auto got = load_config_json(cfg);
  CHECK(got.datum.num_positive == 3);
  CHECK(got.aut.order == 2);
  CHECK(cartan_type_name(got.datum.cartan()) == "A2");
  CHECK_THROWS_AS(load_config_json("{"), validation_error);
  CHECK_THROWS_AS(load_config_json("{}"), validation_error);
}
