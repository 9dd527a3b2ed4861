#include <gtest/gtest.h>

#include <unordered_set>

#include "seqsr/face.hpp"

using seqsr::Face;

TEST(Face, LabelsAndBits) {
    const Face f{1, 3, 64};
    EXPECT_EQ(f.size(), 3);
    EXPECT_EQ(f.dim(), 2);
    EXPECT_EQ(f.labels(), (std::vector<int>{1, 3, 64}));
    EXPECT_EQ(f.min_label(), 1);
    EXPECT_EQ(f.max_label(), 64);
    EXPECT_EQ(f.to_string(), "{1,3,64}");
    EXPECT_EQ(Face{}.to_string(), "{}");
    EXPECT_EQ(Face{}.dim(), -1);
}

TEST(Face, RejectsLabelsOutsideRange) {
    EXPECT_THROW(Face::from_labels({0}), seqsr::InputError);
    EXPECT_THROW(Face::from_labels({65}), seqsr::InputError);
    EXPECT_THROW(Face{}.with(-2), seqsr::InputError);
}

TEST(Face, SetOperations) {
    const Face a{1, 2, 3}, b{2, 4};
    EXPECT_EQ(a | b, (Face{1, 2, 3, 4}));
    EXPECT_EQ(a & b, Face{2});
    EXPECT_EQ(a - b, (Face{1, 3}));
    EXPECT_TRUE(Face{2}.subset_of(a));
    EXPECT_FALSE(b.subset_of(a));
    EXPECT_TRUE(a.intersects(b));
    EXPECT_FALSE(Face{1}.intersects(Face{2}));
}

TEST(Face, LexOrderOnAscendingLists) {
    // ∅ < {1} < {1,2} < {1,3} < {2}
    std::vector<Face> v{Face{2}, Face{1, 3}, Face{}, Face{1, 2}, Face{1}};
    std::sort(v.begin(), v.end());
    EXPECT_EQ(v, (std::vector<Face>{Face{}, Face{1}, Face{1, 2}, Face{1, 3}, Face{2}}));
    EXPECT_LT((Face{1, 2, 9}), (Face{1, 3}));
}

TEST(Face, SubsetEnumeration) {
    int count = 0;
    seqsr::for_each_subset(Face{1, 4, 6}, [&](Face) { ++count; });
    EXPECT_EQ(count, 8);
    std::vector<Face> two;
    seqsr::for_each_k_subset(Face{1, 2, 3, 4}, 2, [&](Face f) { two.push_back(f); });
    EXPECT_EQ(two.size(), 6u);
    for (Face f : two) EXPECT_EQ(f.size(), 2);
}

TEST(Face, Hashable) {
    std::unordered_set<Face> s{Face{1}, Face{1}, Face{2, 3}};
    EXPECT_EQ(s.size(), 2u);
}
