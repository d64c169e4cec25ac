// Generated by scripts/gen_unicode_tables.py -- do not edit.
#pragma once

#include <cstdint>

namespace lemcluster::detail {

struct CaseFoldEntry {
  char32_t cp;
  char32_t out[3];
  std::uint8_t len;
};

inline constexpr CaseFoldEntry kCaseFold[] = {
  {0xb5, {0x3bc, 0x0, 0x0}, 1},
  {0xc0, {0xe0, 0x0, 0x0}, 1},
  {0xc1, {0xe1, 0x0, 0x0}, 1},
  {0xc2, {0xe2, 0x0, 0x0}, 1},
  {0xc3, {0xe3, 0x0, 0x0}, 1},
  {0xc4, {0xe4, 0x0, 0x0}, 1},
  {0xc5, {0xe5, 0x0, 0x0}, 1},
  {0xc6, {0xe6, 0x0, 0x0}, 1},
  {0xc7, {0xe7, 0x0, 0x0}, 1},
  {0xc8, {0xe8, 0x0, 0x0}, 1},
  {0xc9, {0xe9, 0x0, 0x0}, 1},
  {0xca, {0xea, 0x0, 0x0}, 1},
  {0xcb, {0xeb, 0x0, 0x0}, 1},
  {0xcc, {0xec, 0x0, 0x0}, 1},
  {0xcd, {0xed, 0x0, 0x0}, 1},
  {0xce, {0xee, 0x0, 0x0}, 1},
  {0xcf, {0xef, 0x0, 0x0}, 1},
  {0xd0, {0xf0, 0x0, 0x0}, 1},
  {0xd1, {0xf1, 0x0, 0x0}, 1},
  {0xd2, {0xf2, 0x0, 0x0}, 1},
  {0xd3, {0xf3, 0x0, 0x0}, 1},
  {0xd4, {0xf4, 0x0, 0x0}, 1},
  {0xd5, {0xf5, 0x0, 0x0}, 1},
  {0xd6, {0xf6, 0x0, 0x0}, 1},
  {0xd8, {0xf8, 0x0, 0x0}, 1},
  {0xd9, {0xf9, 0x0, 0x0}, 1},
  {0xda, {0xfa, 0x0, 0x0}, 1},
  {0xdb, {0xfb, 0x0, 0x0}, 1},
  {0xdc, {0xfc, 0x0, 0x0}, 1},
  {0xdd, {0xfd, 0x0, 0x0}, 1},
  {0xde, {0xfe, 0x0, 0x0}, 1},
  {0xdf, {0x73, 0x73, 0x0}, 2},
  {0x100, {0x101, 0x0, 0x0}, 1},
  {0x102, {0x103, 0x0, 0x0}, 1},
  {0x104, {0x105, 0x0, 0x0}, 1},
  {0x106, {0x107, 0x0, 0x0}, 1},
  {0x108, {0x109, 0x0, 0x0}, 1},
  {0x10a, {0x10b, 0x0, 0x0}, 1},
  {0x10c, {0x10d, 0x0, 0x0}, 1},
  {0x10e, {0x10f, 0x0, 0x0}, 1},
  {0x110, {0x111, 0x0, 0x0}, 1},
  {0x112, {0x113, 0x0, 0x0}, 1},
  {0x114, {0x115, 0x0, 0x0}, 1},
  {0x116, {0x117, 0x0, 0x0}, 1},
  {0x118, {0x119, 0x0, 0x0}, 1},
  {0x11a, {0x11b, 0x0, 0x0}, 1},
  {0x11c, {0x11d, 0x0, 0x0}, 1},
  {0x11e, {0x11f, 0x0, 0x0}, 1},
  {0x120, {0x121, 0x0, 0x0}, 1},
  {0x122, {0x123, 0x0, 0x0}, 1},
  {0x124, {0x125, 0x0, 0x0}, 1},
  {0x126, {0x127, 0x0, 0x0}, 1},
  {0x128, {0x129, 0x0, 0x0}, 1},
  {0x12a, {0x12b, 0x0, 0x0}, 1},
  {0x12c, {0x12d, 0x0, 0x0}, 1},
  {0x12e, {0x12f, 0x0, 0x0}, 1},
  {0x130, {0x69, 0x307, 0x0}, 2},
  {0x132, {0x133, 0x0, 0x0}, 1},
  {0x134, {0x135, 0x0, 0x0}, 1},
  {0x136, {0x137, 0x0, 0x0}, 1},
  {0x139, {0x13a, 0x0, 0x0}, 1},
  {0x13b, {0x13c, 0x0, 0x0}, 1},
  {0x13d, {0x13e, 0x0, 0x0}, 1},
  {0x13f, {0x140, 0x0, 0x0}, 1},
  {0x141, {0x142, 0x0, 0x0}, 1},
  {0x143, {0x144, 0x0, 0x0}, 1},
  {0x145, {0x146, 0x0, 0x0}, 1},
  {0x147, {0x148, 0x0, 0x0}, 1},
  {0x149, {0x2bc, 0x6e, 0x0}, 2},
  {0x14a, {0x14b, 0x0, 0x0}, 1},
  {0x14c, {0x14d, 0x0, 0x0}, 1},
  {0x14e, {0x14f, 0x0, 0x0}, 1},
  {0x150, {0x151, 0x0, 0x0}, 1},
  {0x152, {0x153, 0x0, 0x0}, 1},
  {0x154, {0x155, 0x0, 0x0}, 1},
  {0x156, {0x157, 0x0, 0x0}, 1},
  {0x158, {0x159, 0x0, 0x0}, 1},
  {0x15a, {0x15b, 0x0, 0x0}, 1},
  {0x15c, {0x15d, 0x0, 0x0}, 1},
  {0x15e, {0x15f, 0x0, 0x0}, 1},
  {0x160, {0x161, 0x0, 0x0}, 1},
  {0x162, {0x163, 0x0, 0x0}, 1},
  {0x164, {0x165, 0x0, 0x0}, 1},
  {0x166, {0x167, 0x0, 0x0}, 1},
  {0x168, {0x169, 0x0, 0x0}, 1},
  {0x16a, {0x16b, 0x0, 0x0}, 1},
  {0x16c, {0x16d, 0x0, 0x0}, 1},
  {0x16e, {0x16f, 0x0, 0x0}, 1},
  {0x170, {0x171, 0x0, 0x0}, 1},
  {0x172, {0x173, 0x0, 0x0}, 1},
  {0x174, {0x175, 0x0, 0x0}, 1},
  {0x176, {0x177, 0x0, 0x0}, 1},
  {0x178, {0xff, 0x0, 0x0}, 1},
  {0x179, {0x17a, 0x0, 0x0}, 1},
  {0x17b, {0x17c, 0x0, 0x0}, 1},
  {0x17d, {0x17e, 0x0, 0x0}, 1},
  {0x17f, {0x73, 0x0, 0x0}, 1},
  {0x181, {0x253, 0x0, 0x0}, 1},
  {0x182, {0x183, 0x0, 0x0}, 1},
  {0x184, {0x185, 0x0, 0x0}, 1},
  {0x186, {0x254, 0x0, 0x0}, 1},
  {0x187, {0x188, 0x0, 0x0}, 1},
  {0x189, {0x256, 0x0, 0x0}, 1},
  {0x18a, {0x257, 0x0, 0x0}, 1},
  {0x18b, {0x18c, 0x0, 0x0}, 1},
  {0x18e, {0x1dd, 0x0, 0x0}, 1},
  {0x18f, {0x259, 0x0, 0x0}, 1},
  {0x190, {0x25b, 0x0, 0x0}, 1},
  {0x191, {0x192, 0x0, 0x0}, 1},
  {0x193, {0x260, 0x0, 0x0}, 1},
  {0x194, {0x263, 0x0, 0x0}, 1},
  {0x196, {0x269, 0x0, 0x0}, 1},
  {0x197, {0x268, 0x0, 0x0}, 1},
  {0x198, {0x199, 0x0, 0x0}, 1},
  {0x19c, {0x26f, 0x0, 0x0}, 1},
  {0x19d, {0x272, 0x0, 0x0}, 1},
  {0x19f, {0x275, 0x0, 0x0}, 1},
  {0x1a0, {0x1a1, 0x0, 0x0}, 1},
  {0x1a2, {0x1a3, 0x0, 0x0}, 1},
  {0x1a4, {0x1a5, 0x0, 0x0}, 1},
  {0x1a6, {0x280, 0x0, 0x0}, 1},
  {0x1a7, {0x1a8, 0x0, 0x0}, 1},
  {0x1a9, {0x283, 0x0, 0x0}, 1},
  {0x1ac, {0x1ad, 0x0, 0x0}, 1},
  {0x1ae, {0x288, 0x0, 0x0}, 1},
  {0x1af, {0x1b0, 0x0, 0x0}, 1},
  {0x1b1, {0x28a, 0x0, 0x0}, 1},
  {0x1b2, {0x28b, 0x0, 0x0}, 1},
  {0x1b3, {0x1b4, 0x0, 0x0}, 1},
  {0x1b5, {0x1b6, 0x0, 0x0}, 1},
  {0x1b7, {0x292, 0x0, 0x0}, 1},
  {0x1b8, {0x1b9, 0x0, 0x0}, 1},
  {0x1bc, {0x1bd, 0x0, 0x0}, 1},
  {0x1c4, {0x1c6, 0x0, 0x0}, 1},
  {0x1c5, {0x1c6, 0x0, 0x0}, 1},
  {0x1c7, {0x1c9, 0x0, 0x0}, 1},
  {0x1c8, {0x1c9, 0x0, 0x0}, 1},
  {0x1ca, {0x1cc, 0x0, 0x0}, 1},
  {0x1cb, {0x1cc, 0x0, 0x0}, 1},
  {0x1cd, {0x1ce, 0x0, 0x0}, 1},
  {0x1cf, {0x1d0, 0x0, 0x0}, 1},
  {0x1d1, {0x1d2, 0x0, 0x0}, 1},
  {0x1d3, {0x1d4, 0x0, 0x0}, 1},
  {0x1d5, {0x1d6, 0x0, 0x0}, 1},
  {0x1d7, {0x1d8, 0x0, 0x0}, 1},
  {0x1d9, {0x1da, 0x0, 0x0}, 1},
  {0x1db, {0x1dc, 0x0, 0x0}, 1},
  {0x1de, {0x1df, 0x0, 0x0}, 1},
  {0x1e0, {0x1e1, 0x0, 0x0}, 1},
  {0x1e2, {0x1e3, 0x0, 0x0}, 1},
  {0x1e4, {0x1e5, 0x0, 0x0}, 1},
  {0x1e6, {0x1e7, 0x0, 0x0}, 1},
  {0x1e8, {0x1e9, 0x0, 0x0}, 1},
  {0x1ea, {0x1eb, 0x0, 0x0}, 1},
  {0x1ec, {0x1ed, 0x0, 0x0}, 1},
  {0x1ee, {0x1ef, 0x0, 0x0}, 1},
  {0x1f0, {0x6a, 0x30c, 0x0}, 2},
  {0x1f1, {0x1f3, 0x0, 0x0}, 1},
  {0x1f2, {0x1f3, 0x0, 0x0}, 1},
  {0x1f4, {0x1f5, 0x0, 0x0}, 1},
  {0x1f6, {0x195, 0x0, 0x0}, 1},
  {0x1f7, {0x1bf, 0x0, 0x0}, 1},
  {0x1f8, {0x1f9, 0x0, 0x0}, 1},
  {0x1fa, {0x1fb, 0x0, 0x0}, 1},
  {0x1fc, {0x1fd, 0x0, 0x0}, 1},
  {0x1fe, {0x1ff, 0x0, 0x0}, 1},
  {0x200, {0x201, 0x0, 0x0}, 1},
  {0x202, {0x203, 0x0, 0x0}, 1},
  {0x204, {0x205, 0x0, 0x0}, 1},
  {0x206, {0x207, 0x0, 0x0}, 1},
  {0x208, {0x209, 0x0, 0x0}, 1},
  {0x20a, {0x20b, 0x0, 0x0}, 1},
  {0x20c, {0x20d, 0x0, 0x0}, 1},
  {0x20e, {0x20f, 0x0, 0x0}, 1},
  {0x210, {0x211, 0x0, 0x0}, 1},
  {0x212, {0x213, 0x0, 0x0}, 1},
  {0x214, {0x215, 0x0, 0x0}, 1},
  {0x216, {0x217, 0x0, 0x0}, 1},
  {0x218, {0x219, 0x0, 0x0}, 1},
  {0x21a, {0x21b, 0x0, 0x0}, 1},
  {0x21c, {0x21d, 0x0, 0x0}, 1},
  {0x21e, {0x21f, 0x0, 0x0}, 1},
  {0x220, {0x19e, 0x0, 0x0}, 1},
  {0x222, {0x223, 0x0, 0x0}, 1},
  {0x224, {0x225, 0x0, 0x0}, 1},
  {0x226, {0x227, 0x0, 0x0}, 1},
  {0x228, {0x229, 0x0, 0x0}, 1},
  {0x22a, {0x22b, 0x0, 0x0}, 1},
  {0x22c, {0x22d, 0x0, 0x0}, 1},
  {0x22e, {0x22f, 0x0, 0x0}, 1},
  {0x230, {0x231, 0x0, 0x0}, 1},
  {0x232, {0x233, 0x0, 0x0}, 1},
  {0x23a, {0x2c65, 0x0, 0x0}, 1},
  {0x23b, {0x23c, 0x0, 0x0}, 1},
  {0x23d, {0x19a, 0x0, 0x0}, 1},
  {0x23e, {0x2c66, 0x0, 0x0}, 1},
  {0x241, {0x242, 0x0, 0x0}, 1},
  {0x243, {0x180, 0x0, 0x0}, 1},
  {0x244, {0x289, 0x0, 0x0}, 1},
  {0x245, {0x28c, 0x0, 0x0}, 1},
  {0x246, {0x247, 0x0, 0x0}, 1},
  {0x248, {0x249, 0x0, 0x0}, 1},
  {0x24a, {0x24b, 0x0, 0x0}, 1},
  {0x24c, {0x24d, 0x0, 0x0}, 1},
  {0x24e, {0x24f, 0x0, 0x0}, 1},
  {0x345, {0x3b9, 0x0, 0x0}, 1},
  {0x370, {0x371, 0x0, 0x0}, 1},
  {0x372, {0x373, 0x0, 0x0}, 1},
  {0x376, {0x377, 0x0, 0x0}, 1},
  {0x37f, {0x3f3, 0x0, 0x0}, 1},
  {0x386, {0x3ac, 0x0, 0x0}, 1},
  {0x388, {0x3ad, 0x0, 0x0}, 1},
  {0x389, {0x3ae, 0x0, 0x0}, 1},
  {0x38a, {0x3af, 0x0, 0x0}, 1},
  {0x38c, {0x3cc, 0x0, 0x0}, 1},
  {0x38e, {0x3cd, 0x0, 0x0}, 1},
  {0x38f, {0x3ce, 0x0, 0x0}, 1},
  {0x390, {0x3b9, 0x308, 0x301}, 3},
  {0x391, {0x3b1, 0x0, 0x0}, 1},
  {0x392, {0x3b2, 0x0, 0x0}, 1},
  {0x393, {0x3b3, 0x0, 0x0}, 1},
  {0x394, {0x3b4, 0x0, 0x0}, 1},
  {0x395, {0x3b5, 0x0, 0x0}, 1},
  {0x396, {0x3b6, 0x0, 0x0}, 1},
  {0x397, {0x3b7, 0x0, 0x0}, 1},
  {0x398, {0x3b8, 0x0, 0x0}, 1},
  {0x399, {0x3b9, 0x0, 0x0}, 1},
  {0x39a, {0x3ba, 0x0, 0x0}, 1},
  {0x39b, {0x3bb, 0x0, 0x0}, 1},
  {0x39c, {0x3bc, 0x0, 0x0}, 1},
  {0x39d, {0x3bd, 0x0, 0x0}, 1},
  {0x39e, {0x3be, 0x0, 0x0}, 1},
  {0x39f, {0x3bf, 0x0, 0x0}, 1},
  {0x3a0, {0x3c0, 0x0, 0x0}, 1},
  {0x3a1, {0x3c1, 0x0, 0x0}, 1},
  {0x3a3, {0x3c3, 0x0, 0x0}, 1},
  {0x3a4, {0x3c4, 0x0, 0x0}, 1},
  {0x3a5, {0x3c5, 0x0, 0x0}, 1},
  {0x3a6, {0x3c6, 0x0, 0x0}, 1},
  {0x3a7, {0x3c7, 0x0, 0x0}, 1},
  {0x3a8, {0x3c8, 0x0, 0x0}, 1},
  {0x3a9, {0x3c9, 0x0, 0x0}, 1},
  {0x3aa, {0x3ca, 0x0, 0x0}, 1},
  {0x3ab, {0x3cb, 0x0, 0x0}, 1},
  {0x3b0, {0x3c5, 0x308, 0x301}, 3},
  {0x3c2, {0x3c3, 0x0, 0x0}, 1},
  {0x3cf, {0x3d7, 0x0, 0x0}, 1},
  {0x3d0, {0x3b2, 0x0, 0x0}, 1},
  {0x3d1, {0x3b8, 0x0, 0x0}, 1},
  {0x3d5, {0x3c6, 0x0, 0x0}, 1},
  {0x3d6, {0x3c0, 0x0, 0x0}, 1},
  {0x3d8, {0x3d9, 0x0, 0x0}, 1},
  {0x3da, {0x3db, 0x0, 0x0}, 1},
  {0x3dc, {0x3dd, 0x0, 0x0}, 1},
  {0x3de, {0x3df, 0x0, 0x0}, 1},
  {0x3e0, {0x3e1, 0x0, 0x0}, 1},
  {0x3e2, {0x3e3, 0x0, 0x0}, 1},
  {0x3e4, {0x3e5, 0x0, 0x0}, 1},
  {0x3e6, {0x3e7, 0x0, 0x0}, 1},
  {0x3e8, {0x3e9, 0x0, 0x0}, 1},
  {0x3ea, {0x3eb, 0x0, 0x0}, 1},
  {0x3ec, {0x3ed, 0x0, 0x0}, 1},
  {0x3ee, {0x3ef, 0x0, 0x0}, 1},
  {0x3f0, {0x3ba, 0x0, 0x0}, 1},
  {0x3f1, {0x3c1, 0x0, 0x0}, 1},
  {0x3f4, {0x3b8, 0x0, 0x0}, 1},
  {0x3f5, {0x3b5, 0x0, 0x0}, 1},
  {0x3f7, {0x3f8, 0x0, 0x0}, 1},
  {0x3f9, {0x3f2, 0x0, 0x0}, 1},
  {0x3fa, {0x3fb, 0x0, 0x0}, 1},
  {0x3fd, {0x37b, 0x0, 0x0}, 1},
  {0x3fe, {0x37c, 0x0, 0x0}, 1},
  {0x3ff, {0x37d, 0x0, 0x0}, 1},
  {0x400, {0x450, 0x0, 0x0}, 1},
  {0x401, {0x451, 0x0, 0x0}, 1},
  {0x402, {0x452, 0x0, 0x0}, 1},
  {0x403, {0x453, 0x0, 0x0}, 1},
  {0x404, {0x454, 0x0, 0x0}, 1},
  {0x405, {0x455, 0x0, 0x0}, 1},
  {0x406, {0x456, 0x0, 0x0}, 1},
  {0x407, {0x457, 0x0, 0x0}, 1},
  {0x408, {0x458, 0x0, 0x0}, 1},
  {0x409, {0x459, 0x0, 0x0}, 1},
  {0x40a, {0x45a, 0x0, 0x0}, 1},
  {0x40b, {0x45b, 0x0, 0x0}, 1},
  {0x40c, {0x45c, 0x0, 0x0}, 1},
  {0x40d, {0x45d, 0x0, 0x0}, 1},
  {0x40e, {0x45e, 0x0, 0x0}, 1},
  {0x40f, {0x45f, 0x0, 0x0}, 1},
  {0x410, {0x430, 0x0, 0x0}, 1},
  {0x411, {0x431, 0x0, 0x0}, 1},
  {0x412, {0x432, 0x0, 0x0}, 1},
  {0x413, {0x433, 0x0, 0x0}, 1},
  {0x414, {0x434, 0x0, 0x0}, 1},
  {0x415, {0x435, 0x0, 0x0}, 1},
  {0x416, {0x436, 0x0, 0x0}, 1},
  {0x417, {0x437, 0x0, 0x0}, 1},
  {0x418, {0x438, 0x0, 0x0}, 1},
  {0x419, {0x439, 0x0, 0x0}, 1},
  {0x41a, {0x43a, 0x0, 0x0}, 1},
  {0x41b, {0x43b, 0x0, 0x0}, 1},
  {0x41c, {0x43c, 0x0, 0x0}, 1},
  {0x41d, {0x43d, 0x0, 0x0}, 1},
  {0x41e, {0x43e, 0x0, 0x0}, 1},
  {0x41f, {0x43f, 0x0, 0x0}, 1},
  {0x420, {0x440, 0x0, 0x0}, 1},
  {0x421, {0x441, 0x0, 0x0}, 1},
  {0x422, {0x442, 0x0, 0x0}, 1},
  {0x423, {0x443, 0x0, 0x0}, 1},
  {0x424, {0x444, 0x0, 0x0}, 1},
  {0x425, {0x445, 0x0, 0x0}, 1},
  {0x426, {0x446, 0x0, 0x0}, 1},
  {0x427, {0x447, 0x0, 0x0}, 1},
  {0x428, {0x448, 0x0, 0x0}, 1},
  {0x429, {0x449, 0x0, 0x0}, 1},
  {0x42a, {0x44a, 0x0, 0x0}, 1},
  {0x42b, {0x44b, 0x0, 0x0}, 1},
  {0x42c, {0x44c, 0x0, 0x0}, 1},
  {0x42d, {0x44d, 0x0, 0x0}, 1},
  {0x42e, {0x44e, 0x0, 0x0}, 1},
  {0x42f, {0x44f, 0x0, 0x0}, 1},
  {0x460, {0x461, 0x0, 0x0}, 1},
  {0x462, {0x463, 0x0, 0x0}, 1},
  {0x464, {0x465, 0x0, 0x0}, 1},
  {0x466, {0x467, 0x0, 0x0}, 1},
  {0x468, {0x469, 0x0, 0x0}, 1},
  {0x46a, {0x46b, 0x0, 0x0}, 1},
  {0x46c, {0x46d, 0x0, 0x0}, 1},
  {0x46e, {0x46f, 0x0, 0x0}, 1},
  {0x470, {0x471, 0x0, 0x0}, 1},
  {0x472, {0x473, 0x0, 0x0}, 1},
  {0x474, {0x475, 0x0, 0x0}, 1},
  {0x476, {0x477, 0x0, 0x0}, 1},
  {0x478, {0x479, 0x0, 0x0}, 1},
  {0x47a, {0x47b, 0x0, 0x0}, 1},
  {0x47c, {0x47d, 0x0, 0x0}, 1},
  {0x47e, {0x47f, 0x0, 0x0}, 1},
  {0x480, {0x481, 0x0, 0x0}, 1},
  {0x48a, {0x48b, 0x0, 0x0}, 1},
  {0x48c, {0x48d, 0x0, 0x0}, 1},
  {0x48e, {0x48f, 0x0, 0x0}, 1},
  {0x490, {0x491, 0x0, 0x0}, 1},
  {0x492, {0x493, 0x0, 0x0}, 1},
  {0x494, {0x495, 0x0, 0x0}, 1},
  {0x496, {0x497, 0x0, 0x0}, 1},
  {0x498, {0x499, 0x0, 0x0}, 1},
  {0x49a, {0x49b, 0x0, 0x0}, 1},
  {0x49c, {0x49d, 0x0, 0x0}, 1},
  {0x49e, {0x49f, 0x0, 0x0}, 1},
  {0x4a0, {0x4a1, 0x0, 0x0}, 1},
  {0x4a2, {0x4a3, 0x0, 0x0}, 1},
  {0x4a4, {0x4a5, 0x0, 0x0}, 1},
  {0x4a6, {0x4a7, 0x0, 0x0}, 1},
  {0x4a8, {0x4a9, 0x0, 0x0}, 1},
  {0x4aa, {0x4ab, 0x0, 0x0}, 1},
  {0x4ac, {0x4ad, 0x0, 0x0}, 1},
  {0x4ae, {0x4af, 0x0, 0x0}, 1},
  {0x4b0, {0x4b1, 0x0, 0x0}, 1},
  {0x4b2, {0x4b3, 0x0, 0x0}, 1},
  {0x4b4, {0x4b5, 0x0, 0x0}, 1},
  {0x4b6, {0x4b7, 0x0, 0x0}, 1},
  {0x4b8, {0x4b9, 0x0, 0x0}, 1},
  {0x4ba, {0x4bb, 0x0, 0x0}, 1},
  {0x4bc, {0x4bd, 0x0, 0x0}, 1},
  {0x4be, {0x4bf, 0x0, 0x0}, 1},
  {0x4c0, {0x4cf, 0x0, 0x0}, 1},
  {0x4c1, {0x4c2, 0x0, 0x0}, 1},
  {0x4c3, {0x4c4, 0x0, 0x0}, 1},
  {0x4c5, {0x4c6, 0x0, 0x0}, 1},
  {0x4c7, {0x4c8, 0x0, 0x0}, 1},
  {0x4c9, {0x4ca, 0x0, 0x0}, 1},
  {0x4cb, {0x4cc, 0x0, 0x0}, 1},
  {0x4cd, {0x4ce, 0x0, 0x0}, 1},
  {0x4d0, {0x4d1, 0x0, 0x0}, 1},
  {0x4d2, {0x4d3, 0x0, 0x0}, 1},
  {0x4d4, {0x4d5, 0x0, 0x0}, 1},
  {0x4d6, {0x4d7, 0x0, 0x0}, 1},
  {0x4d8, {0x4d9, 0x0, 0x0}, 1},
  {0x4da, {0x4db, 0x0, 0x0}, 1},
  {0x4dc, {0x4dd, 0x0, 0x0}, 1},
  {0x4de, {0x4df, 0x0, 0x0}, 1},
  {0x4e0, {0x4e1, 0x0, 0x0}, 1},
  {0x4e2, {0x4e3, 0x0, 0x0}, 1},
  {0x4e4, {0x4e5, 0x0, 0x0}, 1},
  {0x4e6, {0x4e7, 0x0, 0x0}, 1},
  {0x4e8, {0x4e9, 0x0, 0x0}, 1},
  {0x4ea, {0x4eb, 0x0, 0x0}, 1},
  {0x4ec, {0x4ed, 0x0, 0x0}, 1},
  {0x4ee, {0x4ef, 0x0, 0x0}, 1},
  {0x4f0, {0x4f1, 0x0, 0x0}, 1},
  {0x4f2, {0x4f3, 0x0, 0x0}, 1},
  {0x4f4, {0x4f5, 0x0, 0x0}, 1},
  {0x4f6, {0x4f7, 0x0, 0x0}, 1},
  {0x4f8, {0x4f9, 0x0, 0x0}, 1},
  {0x4fa, {0x4fb, 0x0, 0x0}, 1},
  {0x4fc, {0x4fd, 0x0, 0x0}, 1},
  {0x4fe, {0x4ff, 0x0, 0x0}, 1},
  {0x500, {0x501, 0x0, 0x0}, 1},
  {0x502, {0x503, 0x0, 0x0}, 1},
  {0x504, {0x505, 0x0, 0x0}, 1},
  {0x506, {0x507, 0x0, 0x0}, 1},
  {0x508, {0x509, 0x0, 0x0}, 1},
  {0x50a, {0x50b, 0x0, 0x0}, 1},
  {0x50c, {0x50d, 0x0, 0x0}, 1},
  {0x50e, {0x50f, 0x0, 0x0}, 1},
  {0x510, {0x511, 0x0, 0x0}, 1},
  {0x512, {0x513, 0x0, 0x0}, 1},
  {0x514, {0x515, 0x0, 0x0}, 1},
  {0x516, {0x517, 0x0, 0x0}, 1},
  {0x518, {0x519, 0x0, 0x0}, 1},
  {0x51a, {0x51b, 0x0, 0x0}, 1},
  {0x51c, {0x51d, 0x0, 0x0}, 1},
  {0x51e, {0x51f, 0x0, 0x0}, 1},
  {0x520, {0x521, 0x0, 0x0}, 1},
  {0x522, {0x523, 0x0, 0x0}, 1},
  {0x524, {0x525, 0x0, 0x0}, 1},
  {0x526, {0x527, 0x0, 0x0}, 1},
  {0x528, {0x529, 0x0, 0x0}, 1},
  {0x52a, {0x52b, 0x0, 0x0}, 1},
  {0x52c, {0x52d, 0x0, 0x0}, 1},
  {0x52e, {0x52f, 0x0, 0x0}, 1},
  {0x531, {0x561, 0x0, 0x0}, 1},
  {0x532, {0x562, 0x0, 0x0}, 1},
  {0x533, {0x563, 0x0, 0x0}, 1},
  {0x534, {0x564, 0x0, 0x0}, 1},
  {0x535, {0x565, 0x0, 0x0}, 1},
  {0x536, {0x566, 0x0, 0x0}, 1},
  {0x537, {0x567, 0x0, 0x0}, 1},
  {0x538, {0x568, 0x0, 0x0}, 1},
  {0x539, {0x569, 0x0, 0x0}, 1},
  {0x53a, {0x56a, 0x0, 0x0}, 1},
  {0x53b, {0x56b, 0x0, 0x0}, 1},
  {0x53c, {0x56c, 0x0, 0x0}, 1},
  {0x53d, {0x56d, 0x0, 0x0}, 1},
  {0x53e, {0x56e, 0x0, 0x0}, 1},
  {0x53f, {0x56f, 0x0, 0x0}, 1},
  {0x540, {0x570, 0x0, 0x0}, 1},
  {0x541, {0x571, 0x0, 0x0}, 1},
  {0x542, {0x572, 0x0, 0x0}, 1},
  {0x543, {0x573, 0x0, 0x0}, 1},
  {0x544, {0x574, 0x0, 0x0}, 1},
  {0x545, {0x575, 0x0, 0x0}, 1},
  {0x546, {0x576, 0x0, 0x0}, 1},
  {0x547, {0x577, 0x0, 0x0}, 1},
  {0x548, {0x578, 0x0, 0x0}, 1},
  {0x549, {0x579, 0x0, 0x0}, 1},
  {0x54a, {0x57a, 0x0, 0x0}, 1},
  {0x54b, {0x57b, 0x0, 0x0}, 1},
  {0x54c, {0x57c, 0x0, 0x0}, 1},
  {0x54d, {0x57d, 0x0, 0x0}, 1},
  {0x54e, {0x57e, 0x0, 0x0}, 1},
  {0x54f, {0x57f, 0x0, 0x0}, 1},
  {0x550, {0x580, 0x0, 0x0}, 1},
  {0x551, {0x581, 0x0, 0x0}, 1},
  {0x552, {0x582, 0x0, 0x0}, 1},
  {0x553, {0x583, 0x0, 0x0}, 1},
  {0x554, {0x584, 0x0, 0x0}, 1},
  {0x555, {0x585, 0x0, 0x0}, 1},
  {0x556, {0x586, 0x0, 0x0}, 1},
  {0x587, {0x565, 0x582, 0x0}, 2},
  {0x10a0, {0x2d00, 0x0, 0x0}, 1},
  {0x10a1, {0x2d01, 0x0, 0x0}, 1},
  {0x10a2, {0x2d02, 0x0, 0x0}, 1},
  {0x10a3, {0x2d03, 0x0, 0x0}, 1},
  {0x10a4, {0x2d04, 0x0, 0x0}, 1},
  {0x10a5, {0x2d05, 0x0, 0x0}, 1},
  {0x10a6, {0x2d06, 0x0, 0x0}, 1},
  {0x10a7, {0x2d07, 0x0, 0x0}, 1},
  {0x10a8, {0x2d08, 0x0, 0x0}, 1},
  {0x10a9, {0x2d09, 0x0, 0x0}, 1},
  {0x10aa, {0x2d0a, 0x0, 0x0}, 1},
  {0x10ab, {0x2d0b, 0x0, 0x0}, 1},
  {0x10ac, {0x2d0c, 0x0, 0x0}, 1},
  {0x10ad, {0x2d0d, 0x0, 0x0}, 1},
  {0x10ae, {0x2d0e, 0x0, 0x0}, 1},
  {0x10af, {0x2d0f, 0x0, 0x0}, 1},
  {0x10b0, {0x2d10, 0x0, 0x0}, 1},
  {0x10b1, {0x2d11, 0x0, 0x0}, 1},
  {0x10b2, {0x2d12, 0x0, 0x0}, 1},
  {0x10b3, {0x2d13, 0x0, 0x0}, 1},
  {0x10b4, {0x2d14, 0x0, 0x0}, 1},
  {0x10b5, {0x2d15, 0x0, 0x0}, 1},
  {0x10b6, {0x2d16, 0x0, 0x0}, 1},
  {0x10b7, {0x2d17, 0x0, 0x0}, 1},
  {0x10b8, {0x2d18, 0x0, 0x0}, 1},
  {0x10b9, {0x2d19, 0x0, 0x0}, 1},
  {0x10ba, {0x2d1a, 0x0, 0x0}, 1},
  {0x10bb, {0x2d1b, 0x0, 0x0}, 1},
  {0x10bc, {0x2d1c, 0x0, 0x0}, 1},
  {0x10bd, {0x2d1d, 0x0, 0x0}, 1},
  {0x10be, {0x2d1e, 0x0, 0x0}, 1},
  {0x10bf, {0x2d1f, 0x0, 0x0}, 1},
  {0x10c0, {0x2d20, 0x0, 0x0}, 1},
  {0x10c1, {0x2d21, 0x0, 0x0}, 1},
  {0x10c2, {0x2d22, 0x0, 0x0}, 1},
  {0x10c3, {0x2d23, 0x0, 0x0}, 1},
  {0x10c4, {0x2d24, 0x0, 0x0}, 1},
  {0x10c5, {0x2d25, 0x0, 0x0}, 1},
  {0x10c7, {0x2d27, 0x0, 0x0}, 1},
  {0x10cd, {0x2d2d, 0x0, 0x0}, 1},
  {0x13f8, {0x13f0, 0x0, 0x0}, 1},
  {0x13f9, {0x13f1, 0x0, 0x0}, 1},
  {0x13fa, {0x13f2, 0x0, 0x0}, 1},
  {0x13fb, {0x13f3, 0x0, 0x0}, 1},
  {0x13fc, {0x13f4, 0x0, 0x0}, 1},
  {0x13fd, {0x13f5, 0x0, 0x0}, 1},
  {0x1c80, {0x432, 0x0, 0x0}, 1},
  {0x1c81, {0x434, 0x0, 0x0}, 1},
  {0x1c82, {0x43e, 0x0, 0x0}, 1},
  {0x1c83, {0x441, 0x0, 0x0}, 1},
  {0x1c84, {0x442, 0x0, 0x0}, 1},
  {0x1c85, {0x442, 0x0, 0x0}, 1},
  {0x1c86, {0x44a, 0x0, 0x0}, 1},
  {0x1c87, {0x463, 0x0, 0x0}, 1},
  {0x1c88, {0xa64b, 0x0, 0x0}, 1},
  {0x1c90, {0x10d0, 0x0, 0x0}, 1},
  {0x1c91, {0x10d1, 0x0, 0x0}, 1},
  {0x1c92, {0x10d2, 0x0, 0x0}, 1},
  {0x1c93, {0x10d3, 0x0, 0x0}, 1},
  {0x1c94, {0x10d4, 0x0, 0x0}, 1},
  {0x1c95, {0x10d5, 0x0, 0x0}, 1},
  {0x1c96, {0x10d6, 0x0, 0x0}, 1},
  {0x1c97, {0x10d7, 0x0, 0x0}, 1},
  {0x1c98, {0x10d8, 0x0, 0x0}, 1},
  {0x1c99, {0x10d9, 0x0, 0x0}, 1},
  {0x1c9a, {0x10da, 0x0, 0x0}, 1},
  {0x1c9b, {0x10db, 0x0, 0x0}, 1},
  {0x1c9c, {0x10dc, 0x0, 0x0}, 1},
  {0x1c9d, {0x10dd, 0x0, 0x0}, 1},
  {0x1c9e, {0x10de, 0x0, 0x0}, 1},
  {0x1c9f, {0x10df, 0x0, 0x0}, 1},
  {0x1ca0, {0x10e0, 0x0, 0x0}, 1},
  {0x1ca1, {0x10e1, 0x0, 0x0}, 1},
  {0x1ca2, {0x10e2, 0x0, 0x0}, 1},
  {0x1ca3, {0x10e3, 0x0, 0x0}, 1},
  {0x1ca4, {0x10e4, 0x0, 0x0}, 1},
  {0x1ca5, {0x10e5, 0x0, 0x0}, 1},
  {0x1ca6, {0x10e6, 0x0, 0x0}, 1},
  {0x1ca7, {0x10e7, 0x0, 0x0}, 1},
  {0x1ca8, {0x10e8, 0x0, 0x0}, 1},
  {0x1ca9, {0x10e9, 0x0, 0x0}, 1},
  {0x1caa, {0x10ea, 0x0, 0x0}, 1},
  {0x1cab, {0x10eb, 0x0, 0x0}, 1},
  {0x1cac, {0x10ec, 0x0, 0x0}, 1},
  {0x1cad, {0x10ed, 0x0, 0x0}, 1},
  {0x1cae, {0x10ee, 0x0, 0x0}, 1},
  {0x1caf, {0x10ef, 0x0, 0x0}, 1},
  {0x1cb0, {0x10f0, 0x0, 0x0}, 1},
  {0x1cb1, {0x10f1, 0x0, 0x0}, 1},
  {0x1cb2, {0x10f2, 0x0, 0x0}, 1},
  {0x1cb3, {0x10f3, 0x0, 0x0}, 1},
  {0x1cb4, {0x10f4, 0x0, 0x0}, 1},
  {0x1cb5, {0x10f5, 0x0, 0x0}, 1},
  {0x1cb6, {0x10f6, 0x0, 0x0}, 1},
  {0x1cb7, {0x10f7, 0x0, 0x0}, 1},
  {0x1cb8, {0x10f8, 0x0, 0x0}, 1},
  {0x1cb9, {0x10f9, 0x0, 0x0}, 1},
  {0x1cba, {0x10fa, 0x0, 0x0}, 1},
  {0x1cbd, {0x10fd, 0x0, 0x0}, 1},
  {0x1cbe, {0x10fe, 0x0, 0x0}, 1},
  {0x1cbf, {0x10ff, 0x0, 0x0}, 1},
  {0x1e00, {0x1e01, 0x0, 0x0}, 1},
  {0x1e02, {0x1e03, 0x0, 0x0}, 1},
  {0x1e04, {0x1e05, 0x0, 0x0}, 1},
  {0x1e06, {0x1e07, 0x0, 0x0}, 1},
  {0x1e08, {0x1e09, 0x0, 0x0}, 1},
  {0x1e0a, {0x1e0b, 0x0, 0x0}, 1},
  {0x1e0c, {0x1e0d, 0x0, 0x0}, 1},
  {0x1e0e, {0x1e0f, 0x0, 0x0}, 1},
  {0x1e10, {0x1e11, 0x0, 0x0}, 1},
  {0x1e12, {0x1e13, 0x0, 0x0}, 1},
  {0x1e14, {0x1e15, 0x0, 0x0}, 1},
  {0x1e16, {0x1e17, 0x0, 0x0}, 1},
  {0x1e18, {0x1e19, 0x0, 0x0}, 1},
  {0x1e1a, {0x1e1b, 0x0, 0x0}, 1},
  {0x1e1c, {0x1e1d, 0x0, 0x0}, 1},
  {0x1e1e, {0x1e1f, 0x0, 0x0}, 1},
  {0x1e20, {0x1e21, 0x0, 0x0}, 1},
  {0x1e22, {0x1e23, 0x0, 0x0}, 1},
  {0x1e24, {0x1e25, 0x0, 0x0}, 1},
  {0x1e26, {0x1e27, 0x0, 0x0}, 1},
  {0x1e28, {0x1e29, 0x0, 0x0}, 1},
  {0x1e2a, {0x1e2b, 0x0, 0x0}, 1},
  {0x1e2c, {0x1e2d, 0x0, 0x0}, 1},
  {0x1e2e, {0x1e2f, 0x0, 0x0}, 1},
  {0x1e30, {0x1e31, 0x0, 0x0}, 1},
  {0x1e32, {0x1e33, 0x0, 0x0}, 1},
  {0x1e34, {0x1e35, 0x0, 0x0}, 1},
  {0x1e36, {0x1e37, 0x0, 0x0}, 1},
  {0x1e38, {0x1e39, 0x0, 0x0}, 1},
  {0x1e3a, {0x1e3b, 0x0, 0x0}, 1},
  {0x1e3c, {0x1e3d, 0x0, 0x0}, 1},
  {0x1e3e, {0x1e3f, 0x0, 0x0}, 1},
  {0x1e40, {0x1e41, 0x0, 0x0}, 1},
  {0x1e42, {0x1e43, 0x0, 0x0}, 1},
  {0x1e44, {0x1e45, 0x0, 0x0}, 1},
  {0x1e46, {0x1e47, 0x0, 0x0}, 1},
  {0x1e48, {0x1e49, 0x0, 0x0}, 1},
  {0x1e4a, {0x1e4b, 0x0, 0x0}, 1},
  {0x1e4c, {0x1e4d, 0x0, 0x0}, 1},
  {0x1e4e, {0x1e4f, 0x0, 0x0}, 1},
  {0x1e50, {0x1e51, 0x0, 0x0}, 1},
  {0x1e52, {0x1e53, 0x0, 0x0}, 1},
  {0x1e54, {0x1e55, 0x0, 0x0}, 1},
  {0x1e56, {0x1e57, 0x0, 0x0}, 1},
  {0x1e58, {0x1e59, 0x0, 0x0}, 1},
  {0x1e5a, {0x1e5b, 0x0, 0x0}, 1},
  {0x1e5c, {0x1e5d, 0x0, 0x0}, 1},
  {0x1e5e, {0x1e5f, 0x0, 0x0}, 1},
  {0x1e60, {0x1e61, 0x0, 0x0}, 1},
  {0x1e62, {0x1e63, 0x0, 0x0}, 1},
  {0x1e64, {0x1e65, 0x0, 0x0}, 1},
  {0x1e66, {0x1e67, 0x0, 0x0}, 1},
  {0x1e68, {0x1e69, 0x0, 0x0}, 1},
  {0x1e6a, {0x1e6b, 0x0, 0x0}, 1},
  {0x1e6c, {0x1e6d, 0x0, 0x0}, 1},
  {0x1e6e, {0x1e6f, 0x0, 0x0}, 1},
  {0x1e70, {0x1e71, 0x0, 0x0}, 1},
  {0x1e72, {0x1e73, 0x0, 0x0}, 1},
  {0x1e74, {0x1e75, 0x0, 0x0}, 1},
  {0x1e76, {0x1e77, 0x0, 0x0}, 1},
  {0x1e78, {0x1e79, 0x0, 0x0}, 1},
  {0x1e7a, {0x1e7b, 0x0, 0x0}, 1},
  {0x1e7c, {0x1e7d, 0x0, 0x0}, 1},
  {0x1e7e, {0x1e7f, 0x0, 0x0}, 1},
  {0x1e80, {0x1e81, 0x0, 0x0}, 1},
  {0x1e82, {0x1e83, 0x0, 0x0}, 1},
  {0x1e84, {0x1e85, 0x0, 0x0}, 1},
  {0x1e86, {0x1e87, 0x0, 0x0}, 1},
  {0x1e88, {0x1e89, 0x0, 0x0}, 1},
  {0x1e8a, {0x1e8b, 0x0, 0x0}, 1},
  {0x1e8c, {0x1e8d, 0x0, 0x0}, 1},
  {0x1e8e, {0x1e8f, 0x0, 0x0}, 1},
  {0x1e90, {0x1e91, 0x0, 0x0}, 1},
  {0x1e92, {0x1e93, 0x0, 0x0}, 1},
  {0x1e94, {0x1e95, 0x0, 0x0}, 1},
  {0x1e96, {0x68, 0x331, 0x0}, 2},
  {0x1e97, {0x74, 0x308, 0x0}, 2},
  {0x1e98, {0x77, 0x30a, 0x0}, 2},
  {0x1e99, {0x79, 0x30a, 0x0}, 2},
  {0x1e9a, {0x61, 0x2be, 0x0}, 2},
  {0x1e9b, {0x1e61, 0x0, 0x0}, 1},
  {0x1e9e, {0x73, 0x73, 0x0}, 2},
  {0x1ea0, {0x1ea1, 0x0, 0x0}, 1},
  {0x1ea2, {0x1ea3, 0x0, 0x0}, 1},
  {0x1ea4, {0x1ea5, 0x0, 0x0}, 1},
  {0x1ea6, {0x1ea7, 0x0, 0x0}, 1},
  {0x1ea8, {0x1ea9, 0x0, 0x0}, 1},
  {0x1eaa, {0x1eab, 0x0, 0x0}, 1},
  {0x1eac, {0x1ead, 0x0, 0x0}, 1},
  {0x1eae, {0x1eaf, 0x0, 0x0}, 1},
  {0x1eb0, {0x1eb1, 0x0, 0x0}, 1},
  {0x1eb2, {0x1eb3, 0x0, 0x0}, 1},
  {0x1eb4, {0x1eb5, 0x0, 0x0}, 1},
  {0x1eb6, {0x1eb7, 0x0, 0x0}, 1},
  {0x1eb8, {0x1eb9, 0x0, 0x0}, 1},
  {0x1eba, {0x1ebb, 0x0, 0x0}, 1},
  {0x1ebc, {0x1ebd, 0x0, 0x0}, 1},
  {0x1ebe, {0x1ebf, 0x0, 0x0}, 1},
  {0x1ec0, {0x1ec1, 0x0, 0x0}, 1},
  {0x1ec2, {0x1ec3, 0x0, 0x0}, 1},
  {0x1ec4, {0x1ec5, 0x0, 0x0}, 1},
  {0x1ec6, {0x1ec7, 0x0, 0x0}, 1},
  {0x1ec8, {0x1ec9, 0x0, 0x0}, 1},
  {0x1eca, {0x1ecb, 0x0, 0x0}, 1},
  {0x1ecc, {0x1ecd, 0x0, 0x0}, 1},
  {0x1ece, {0x1ecf, 0x0, 0x0}, 1},
  {0x1ed0, {0x1ed1, 0x0, 0x0}, 1},
  {0x1ed2, {0x1ed3, 0x0, 0x0}, 1},
  {0x1ed4, {0x1ed5, 0x0, 0x0}, 1},
  {0x1ed6, {0x1ed7, 0x0, 0x0}, 1},
  {0x1ed8, {0x1ed9, 0x0, 0x0}, 1},
  {0x1eda, {0x1edb, 0x0, 0x0}, 1},
  {0x1edc, {0x1edd, 0x0, 0x0}, 1},
  {0x1ede, {0x1edf, 0x0, 0x0}, 1},
  {0x1ee0, {0x1ee1, 0x0, 0x0}, 1},
  {0x1ee2, {0x1ee3, 0x0, 0x0}, 1},
  {0x1ee4, {0x1ee5, 0x0, 0x0}, 1},
  {0x1ee6, {0x1ee7, 0x0, 0x0}, 1},
  {0x1ee8, {0x1ee9, 0x0, 0x0}, 1},
  {0x1eea, {0x1eeb, 0x0, 0x0}, 1},
  {0x1eec, {0x1eed, 0x0, 0x0}, 1},
  {0x1eee, {0x1eef, 0x0, 0x0}, 1},
  {0x1ef0, {0x1ef1, 0x0, 0x0}, 1},
  {0x1ef2, {0x1ef3, 0x0, 0x0}, 1},
  {0x1ef4, {0x1ef5, 0x0, 0x0}, 1},
  {0x1ef6, {0x1ef7, 0x0, 0x0}, 1},
  {0x1ef8, {0x1ef9, 0x0, 0x0}, 1},
  {0x1efa, {0x1efb, 0x0, 0x0}, 1},
  {0x1efc, {0x1efd, 0x0, 0x0}, 1},
  {0x1efe, {0x1eff, 0x0, 0x0}, 1},
  {0x1f08, {0x1f00, 0x0, 0x0}, 1},
  {0x1f09, {0x1f01, 0x0, 0x0}, 1},
  {0x1f0a, {0x1f02, 0x0, 0x0}, 1},
  {0x1f0b, {0x1f03, 0x0, 0x0}, 1},
  {0x1f0c, {0x1f04, 0x0, 0x0}, 1},
  {0x1f0d, {0x1f05, 0x0, 0x0}, 1},
  {0x1f0e, {0x1f06, 0x0, 0x0}, 1},
  {0x1f0f, {0x1f07, 0x0, 0x0}, 1},
  {0x1f18, {0x1f10, 0x0, 0x0}, 1},
  {0x1f19, {0x1f11, 0x0, 0x0}, 1},
  {0x1f1a, {0x1f12, 0x0, 0x0}, 1},
  {0x1f1b, {0x1f13, 0x0, 0x0}, 1},
  {0x1f1c, {0x1f14, 0x0, 0x0}, 1},
  {0x1f1d, {0x1f15, 0x0, 0x0}, 1},
  {0x1f28, {0x1f20, 0x0, 0x0}, 1},
  {0x1f29, {0x1f21, 0x0, 0x0}, 1},
  {0x1f2a, {0x1f22, 0x0, 0x0}, 1},
  {0x1f2b, {0x1f23, 0x0, 0x0}, 1},
  {0x1f2c, {0x1f24, 0x0, 0x0}, 1},
  {0x1f2d, {0x1f25, 0x0, 0x0}, 1},
  {0x1f2e, {0x1f26, 0x0, 0x0}, 1},
  {0x1f2f, {0x1f27, 0x0, 0x0}, 1},
  {0x1f38, {0x1f30, 0x0, 0x0}, 1},
  {0x1f39, {0x1f31, 0x0, 0x0}, 1},
  {0x1f3a, {0x1f32, 0x0, 0x0}, 1},
  {0x1f3b, {0x1f33, 0x0, 0x0}, 1},
  {0x1f3c, {0x1f34, 0x0, 0x0}, 1},
  {0x1f3d, {0x1f35, 0x0, 0x0}, 1},
  {0x1f3e, {0x1f36, 0x0, 0x0}, 1},
  {0x1f3f, {0x1f37, 0x0, 0x0}, 1},
  {0x1f48, {0x1f40, 0x0, 0x0}, 1},
  {0x1f49, {0x1f41, 0x0, 0x0}, 1},
  {0x1f4a, {0x1f42, 0x0, 0x0}, 1},
  {0x1f4b, {0x1f43, 0x0, 0x0}, 1},
  {0x1f4c, {0x1f44, 0x0, 0x0}, 1},
  {0x1f4d, {0x1f45, 0x0, 0x0}, 1},
  {0x1f50, {0x3c5, 0x313, 0x0}, 2},
  {0x1f52, {0x3c5, 0x313, 0x300}, 3},
  {0x1f54, {0x3c5, 0x313, 0x301}, 3},
  {0x1f56, {0x3c5, 0x313, 0x342}, 3},
  {0x1f59, {0x1f51, 0x0, 0x0}, 1},
  {0x1f5b, {0x1f53, 0x0, 0x0}, 1},
  {0x1f5d, {0x1f55, 0x0, 0x0}, 1},
  {0x1f5f, {0x1f57, 0x0, 0x0}, 1},
  {0x1f68, {0x1f60, 0x0, 0x0}, 1},
  {0x1f69, {0x1f61, 0x0, 0x0}, 1},
  {0x1f6a, {0x1f62, 0x0, 0x0}, 1},
  {0x1f6b, {0x1f63, 0x0, 0x0}, 1},
  {0x1f6c, {0x1f64, 0x0, 0x0}, 1},
  {0x1f6d, {0x1f65, 0x0, 0x0}, 1},
  {0x1f6e, {0x1f66, 0x0, 0x0}, 1},
  {0x1f6f, {0x1f67, 0x0, 0x0}, 1},
  {0x1f80, {0x1f00, 0x3b9, 0x0}, 2},
  {0x1f81, {0x1f01, 0x3b9, 0x0}, 2},
  {0x1f82, {0x1f02, 0x3b9, 0x0}, 2},
  {0x1f83, {0x1f03, 0x3b9, 0x0}, 2},
  {0x1f84, {0x1f04, 0x3b9, 0x0}, 2},
  {0x1f85, {0x1f05, 0x3b9, 0x0}, 2},
  {0x1f86, {0x1f06, 0x3b9, 0x0}, 2},
  {0x1f87, {0x1f07, 0x3b9, 0x0}, 2},
  {0x1f88, {0x1f00, 0x3b9, 0x0}, 2},
  {0x1f89, {0x1f01, 0x3b9, 0x0}, 2},
  {0x1f8a, {0x1f02, 0x3b9, 0x0}, 2},
  {0x1f8b, {0x1f03, 0x3b9, 0x0}, 2},
  {0x1f8c, {0x1f04, 0x3b9, 0x0}, 2},
  {0x1f8d, {0x1f05, 0x3b9, 0x0}, 2},
  {0x1f8e, {0x1f06, 0x3b9, 0x0}, 2},
  {0x1f8f, {0x1f07, 0x3b9, 0x0}, 2},
  {0x1f90, {0x1f20, 0x3b9, 0x0}, 2},
  {0x1f91, {0x1f21, 0x3b9, 0x0}, 2},
  {0x1f92, {0x1f22, 0x3b9, 0x0}, 2},
  {0x1f93, {0x1f23, 0x3b9, 0x0}, 2},
  {0x1f94, {0x1f24, 0x3b9, 0x0}, 2},
  {0x1f95, {0x1f25, 0x3b9, 0x0}, 2},
  {0x1f96, {0x1f26, 0x3b9, 0x0}, 2},
  {0x1f97, {0x1f27, 0x3b9, 0x0}, 2},
  {0x1f98, {0x1f20, 0x3b9, 0x0}, 2},
  {0x1f99, {0x1f21, 0x3b9, 0x0}, 2},
  {0x1f9a, {0x1f22, 0x3b9, 0x0}, 2},
  {0x1f9b, {0x1f23, 0x3b9, 0x0}, 2},
  {0x1f9c, {0x1f24, 0x3b9, 0x0}, 2},
  {0x1f9d, {0x1f25, 0x3b9, 0x0}, 2},
  {0x1f9e, {0x1f26, 0x3b9, 0x0}, 2},
  {0x1f9f, {0x1f27, 0x3b9, 0x0}, 2},
  {0x1fa0, {0x1f60, 0x3b9, 0x0}, 2},
  {0x1fa1, {0x1f61, 0x3b9, 0x0}, 2},
  {0x1fa2, {0x1f62, 0x3b9, 0x0}, 2},
  {0x1fa3, {0x1f63, 0x3b9, 0x0}, 2},
  {0x1fa4, {0x1f64, 0x3b9, 0x0}, 2},
  {0x1fa5, {0x1f65, 0x3b9, 0x0}, 2},
  {0x1fa6, {0x1f66, 0x3b9, 0x0}, 2},
  {0x1fa7, {0x1f67, 0x3b9, 0x0}, 2},
  {0x1fa8, {0x1f60, 0x3b9, 0x0}, 2},
  {0x1fa9, {0x1f61, 0x3b9, 0x0}, 2},
  {0x1faa, {0x1f62, 0x3b9, 0x0}, 2},
  {0x1fab, {0x1f63, 0x3b9, 0x0}, 2},
  {0x1fac, {0x1f64, 0x3b9, 0x0}, 2},
  {0x1fad, {0x1f65, 0x3b9, 0x0}, 2},
  {0x1fae, {0x1f66, 0x3b9, 0x0}, 2},
  {0x1faf, {0x1f67, 0x3b9, 0x0}, 2},
  {0x1fb2, {0x1f70, 0x3b9, 0x0}, 2},
  {0x1fb3, {0x3b1, 0x3b9, 0x0}, 2},
  {0x1fb4, {0x3ac, 0x3b9, 0x0}, 2},
  {0x1fb6, {0x3b1, 0x342, 0x0}, 2},
  {0x1fb7, {0x3b1, 0x342, 0x3b9}, 3},
  {0x1fb8, {0x1fb0, 0x0, 0x0}, 1},
  {0x1fb9, {0x1fb1, 0x0, 0x0}, 1},
  {0x1fba, {0x1f70, 0x0, 0x0}, 1},
  {0x1fbb, {0x1f71, 0x0, 0x0}, 1},
  {0x1fbc, {0x3b1, 0x3b9, 0x0}, 2},
  {0x1fbe, {0x3b9, 0x0, 0x0}, 1},
  {0x1fc2, {0x1f74, 0x3b9, 0x0}, 2},
  {0x1fc3, {0x3b7, 0x3b9, 0x0}, 2},
  {0x1fc4, {0x3ae, 0x3b9, 0x0}, 2},
  {0x1fc6, {0x3b7, 0x342, 0x0}, 2},
  {0x1fc7, {0x3b7, 0x342, 0x3b9}, 3},
  {0x1fc8, {0x1f72, 0x0, 0x0}, 1},
  {0x1fc9, {0x1f73, 0x0, 0x0}, 1},
  {0x1fca, {0x1f74, 0x0, 0x0}, 1},
  {0x1fcb, {0x1f75, 0x0, 0x0}, 1},
  {0x1fcc, {0x3b7, 0x3b9, 0x0}, 2},
  {0x1fd2, {0x3b9, 0x308, 0x300}, 3},
  {0x1fd3, {0x3b9, 0x308, 0x301}, 3},
  {0x1fd6, {0x3b9, 0x342, 0x0}, 2},
  {0x1fd7, {0x3b9, 0x308, 0x342}, 3},
  {0x1fd8, {0x1fd0, 0x0, 0x0}, 1},
  {0x1fd9, {0x1fd1, 0x0, 0x0}, 1},
  {0x1fda, {0x1f76, 0x0, 0x0}, 1},
  {0x1fdb, {0x1f77, 0x0, 0x0}, 1},
  {0x1fe2, {0x3c5, 0x308, 0x300}, 3},
  {0x1fe3, {0x3c5, 0x308, 0x301}, 3},
  {0x1fe4, {0x3c1, 0x313, 0x0}, 2},
  {0x1fe6, {0x3c5, 0x342, 0x0}, 2},
  {0x1fe7, {0x3c5, 0x308, 0x342}, 3},
  {0x1fe8, {0x1fe0, 0x0, 0x0}, 1},
  {0x1fe9, {0x1fe1, 0x0, 0x0}, 1},
  {0x1fea, {0x1f7a, 0x0, 0x0}, 1},
  {0x1feb, {0x1f7b, 0x0, 0x0}, 1},
  {0x1fec, {0x1fe5, 0x0, 0x0}, 1},
  {0x1ff2, {0x1f7c, 0x3b9, 0x0}, 2},
  {0x1ff3, {0x3c9, 0x3b9, 0x0}, 2},
  {0x1ff4, {0x3ce, 0x3b9, 0x0}, 2},
  {0x1ff6, {0x3c9, 0x342, 0x0}, 2},
  {0x1ff7, {0x3c9, 0x342, 0x3b9}, 3},
  {0x1ff8, {0x1f78, 0x0, 0x0}, 1},
  {0x1ff9, {0x1f79, 0x0, 0x0}, 1},
  {0x1ffa, {0x1f7c, 0x0, 0x0}, 1},
  {0x1ffb, {0x1f7d, 0x0, 0x0}, 1},
  {0x1ffc, {0x3c9, 0x3b9, 0x0}, 2},
  {0x2126, {0x3c9, 0x0, 0x0}, 1},
  {0x212a, {0x6b, 0x0, 0x0}, 1},
  {0x212b, {0xe5, 0x0, 0x0}, 1},
  {0x2132, {0x214e, 0x0, 0x0}, 1},
  {0x2160, {0x2170, 0x0, 0x0}, 1},
  {0x2161, {0x2171, 0x0, 0x0}, 1},
  {0x2162, {0x2172, 0x0, 0x0}, 1},
  {0x2163, {0x2173, 0x0, 0x0}, 1},
  {0x2164, {0x2174, 0x0, 0x0}, 1},
  {0x2165, {0x2175, 0x0, 0x0}, 1},
  {0x2166, {0x2176, 0x0, 0x0}, 1},
  {0x2167, {0x2177, 0x0, 0x0}, 1},
  {0x2168, {0x2178, 0x0, 0x0}, 1},
  {0x2169, {0x2179, 0x0, 0x0}, 1},
  {0x216a, {0x217a, 0x0, 0x0}, 1},
  {0x216b, {0x217b, 0x0, 0x0}, 1},
  {0x216c, {0x217c, 0x0, 0x0}, 1},
  {0x216d, {0x217d, 0x0, 0x0}, 1},
  {0x216e, {0x217e, 0x0, 0x0}, 1},
  {0x216f, {0x217f, 0x0, 0x0}, 1},
  {0x2183, {0x2184, 0x0, 0x0}, 1},
  {0x24b6, {0x24d0, 0x0, 0x0}, 1},
  {0x24b7, {0x24d1, 0x0, 0x0}, 1},
  {0x24b8, {0x24d2, 0x0, 0x0}, 1},
  {0x24b9, {0x24d3, 0x0, 0x0}, 1},
  {0x24ba, {0x24d4, 0x0, 0x0}, 1},
  {0x24bb, {0x24d5, 0x0, 0x0}, 1},
  {0x24bc, {0x24d6, 0x0, 0x0}, 1},
  {0x24bd, {0x24d7, 0x0, 0x0}, 1},
  {0x24be, {0x24d8, 0x0, 0x0}, 1},
  {0x24bf, {0x24d9, 0x0, 0x0}, 1},
  {0x24c0, {0x24da, 0x0, 0x0}, 1},
  {0x24c1, {0x24db, 0x0, 0x0}, 1},
  {0x24c2, {0x24dc, 0x0, 0x0}, 1},
  {0x24c3, {0x24dd, 0x0, 0x0}, 1},
  {0x24c4, {0x24de, 0x0, 0x0}, 1},
  {0x24c5, {0x24df, 0x0, 0x0}, 1},
  {0x24c6, {0x24e0, 0x0, 0x0}, 1},
  {0x24c7, {0x24e1, 0x0, 0x0}, 1},
  {0x24c8, {0x24e2, 0x0, 0x0}, 1},
  {0x24c9, {0x24e3, 0x0, 0x0}, 1},
  {0x24ca, {0x24e4, 0x0, 0x0}, 1},
  {0x24cb, {0x24e5, 0x0, 0x0}, 1},
  {0x24cc, {0x24e6, 0x0, 0x0}, 1},
  {0x24cd, {0x24e7, 0x0, 0x0}, 1},
  {0x24ce, {0x24e8, 0x0, 0x0}, 1},
  {0x24cf, {0x24e9, 0x0, 0x0}, 1},
  {0x2c00, {0x2c30, 0x0, 0x0}, 1},
  {0x2c01, {0x2c31, 0x0, 0x0}, 1},
  {0x2c02, {0x2c32, 0x0, 0x0}, 1},
  {0x2c03, {0x2c33, 0x0, 0x0}, 1},
  {0x2c04, {0x2c34, 0x0, 0x0}, 1},
  {0x2c05, {0x2c35, 0x0, 0x0}, 1},
  {0x2c06, {0x2c36, 0x0, 0x0}, 1},
  {0x2c07, {0x2c37, 0x0, 0x0}, 1},
  {0x2c08, {0x2c38, 0x0, 0x0}, 1},
  {0x2c09, {0x2c39, 0x0, 0x0}, 1},
  {0x2c0a, {0x2c3a, 0x0, 0x0}, 1},
  {0x2c0b, {0x2c3b, 0x0, 0x0}, 1},
  {0x2c0c, {0x2c3c, 0x0, 0x0}, 1},
  {0x2c0d, {0x2c3d, 0x0, 0x0}, 1},
  {0x2c0e, {0x2c3e, 0x0, 0x0}, 1},
  {0x2c0f, {0x2c3f, 0x0, 0x0}, 1},
  {0x2c10, {0x2c40, 0x0, 0x0}, 1},
  {0x2c11, {0x2c41, 0x0, 0x0}, 1},
  {0x2c12, {0x2c42, 0x0, 0x0}, 1},
  {0x2c13, {0x2c43, 0x0, 0x0}, 1},
  {0x2c14, {0x2c44, 0x0, 0x0}, 1},
  {0x2c15, {0x2c45, 0x0, 0x0}, 1},
  {0x2c16, {0x2c46, 0x0, 0x0}, 1},
  {0x2c17, {0x2c47, 0x0, 0x0}, 1},
  {0x2c18, {0x2c48, 0x0, 0x0}, 1},
  {0x2c19, {0x2c49, 0x0, 0x0}, 1},
  {0x2c1a, {0x2c4a, 0x0, 0x0}, 1},
  {0x2c1b, {0x2c4b, 0x0, 0x0}, 1},
  {0x2c1c, {0x2c4c, 0x0, 0x0}, 1},
  {0x2c1d, {0x2c4d, 0x0, 0x0}, 1},
  {0x2c1e, {0x2c4e, 0x0, 0x0}, 1},
  {0x2c1f, {0x2c4f, 0x0, 0x0}, 1},
  {0x2c20, {0x2c50, 0x0, 0x0}, 1},
  {0x2c21, {0x2c51, 0x0, 0x0}, 1},
  {0x2c22, {0x2c52, 0x0, 0x0}, 1},
  {0x2c23, {0x2c53, 0x0, 0x0}, 1},
  {0x2c24, {0x2c54, 0x0, 0x0}, 1},
  {0x2c25, {0x2c55, 0x0, 0x0}, 1},
  {0x2c26, {0x2c56, 0x0, 0x0}, 1},
  {0x2c27, {0x2c57, 0x0, 0x0}, 1},
  {0x2c28, {0x2c58, 0x0, 0x0}, 1},
  {0x2c29, {0x2c59, 0x0, 0x0}, 1},
  {0x2c2a, {0x2c5a, 0x0, 0x0}, 1},
  {0x2c2b, {0x2c5b, 0x0, 0x0}, 1},
  {0x2c2c, {0x2c5c, 0x0, 0x0}, 1},
  {0x2c2d, {0x2c5d, 0x0, 0x0}, 1},
  {0x2c2e, {0x2c5e, 0x0, 0x0}, 1},
  {0x2c60, {0x2c61, 0x0, 0x0}, 1},
  {0x2c62, {0x26b, 0x0, 0x0}, 1},
  {0x2c63, {0x1d7d, 0x0, 0x0}, 1},
  {0x2c64, {0x27d, 0x0, 0x0}, 1},
  {0x2c67, {0x2c68, 0x0, 0x0}, 1},
  {0x2c69, {0x2c6a, 0x0, 0x0}, 1},
  {0x2c6b, {0x2c6c, 0x0, 0x0}, 1},
  {0x2c6d, {0x251, 0x0, 0x0}, 1},
  {0x2c6e, {0x271, 0x0, 0x0}, 1},
  {0x2c6f, {0x250, 0x0, 0x0}, 1},
  {0x2c70, {0x252, 0x0, 0x0}, 1},
  {0x2c72, {0x2c73, 0x0, 0x0}, 1},
  {0x2c75, {0x2c76, 0x0, 0x0}, 1},
  {0x2c7e, {0x23f, 0x0, 0x0}, 1},
  {0x2c7f, {0x240, 0x0, 0x0}, 1},
  {0x2c80, {0x2c81, 0x0, 0x0}, 1},
  {0x2c82, {0x2c83, 0x0, 0x0}, 1},
  {0x2c84, {0x2c85, 0x0, 0x0}, 1},
  {0x2c86, {0x2c87, 0x0, 0x0}, 1},
  {0x2c88, {0x2c89, 0x0, 0x0}, 1},
  {0x2c8a, {0x2c8b, 0x0, 0x0}, 1},
  {0x2c8c, {0x2c8d, 0x0, 0x0}, 1},
  {0x2c8e, {0x2c8f, 0x0, 0x0}, 1},
  {0x2c90, {0x2c91, 0x0, 0x0}, 1},
  {0x2c92, {0x2c93, 0x0, 0x0}, 1},
  {0x2c94, {0x2c95, 0x0, 0x0}, 1},
  {0x2c96, {0x2c97, 0x0, 0x0}, 1},
  {0x2c98, {0x2c99, 0x0, 0x0}, 1},
  {0x2c9a, {0x2c9b, 0x0, 0x0}, 1},
  {0x2c9c, {0x2c9d, 0x0, 0x0}, 1},
  {0x2c9e, {0x2c9f, 0x0, 0x0}, 1},
  {0x2ca0, {0x2ca1, 0x0, 0x0}, 1},
  {0x2ca2, {0x2ca3, 0x0, 0x0}, 1},
  {0x2ca4, {0x2ca5, 0x0, 0x0}, 1},
  {0x2ca6, {0x2ca7, 0x0, 0x0}, 1},
  {0x2ca8, {0x2ca9, 0x0, 0x0}, 1},
  {0x2caa, {0x2cab, 0x0, 0x0}, 1},
  {0x2cac, {0x2cad, 0x0, 0x0}, 1},
  {0x2cae, {0x2caf, 0x0, 0x0}, 1},
  {0x2cb0, {0x2cb1, 0x0, 0x0}, 1},
  {0x2cb2, {0x2cb3, 0x0, 0x0}, 1},
  {0x2cb4, {0x2cb5, 0x0, 0x0}, 1},
  {0x2cb6, {0x2cb7, 0x0, 0x0}, 1},
  {0x2cb8, {0x2cb9, 0x0, 0x0}, 1},
  {0x2cba, {0x2cbb, 0x0, 0x0}, 1},
  {0x2cbc, {0x2cbd, 0x0, 0x0}, 1},
  {0x2cbe, {0x2cbf, 0x0, 0x0}, 1},
  {0x2cc0, {0x2cc1, 0x0, 0x0}, 1},
  {0x2cc2, {0x2cc3, 0x0, 0x0}, 1},
  {0x2cc4, {0x2cc5, 0x0, 0x0}, 1},
  {0x2cc6, {0x2cc7, 0x0, 0x0}, 1},
  {0x2cc8, {0x2cc9, 0x0, 0x0}, 1},
  {0x2cca, {0x2ccb, 0x0, 0x0}, 1},
  {0x2ccc, {0x2ccd, 0x0, 0x0}, 1},
  {0x2cce, {0x2ccf, 0x0, 0x0}, 1},
  {0x2cd0, {0x2cd1, 0x0, 0x0}, 1},
  {0x2cd2, {0x2cd3, 0x0, 0x0}, 1},
  {0x2cd4, {0x2cd5, 0x0, 0x0}, 1},
  {0x2cd6, {0x2cd7, 0x0, 0x0}, 1},
  {0x2cd8, {0x2cd9, 0x0, 0x0}, 1},
  {0x2cda, {0x2cdb, 0x0, 0x0}, 1},
  {0x2cdc, {0x2cdd, 0x0, 0x0}, 1},
  {0x2cde, {0x2cdf, 0x0, 0x0}, 1},
  {0x2ce0, {0x2ce1, 0x0, 0x0}, 1},
  {0x2ce2, {0x2ce3, 0x0, 0x0}, 1},
  {0x2ceb, {0x2cec, 0x0, 0x0}, 1},
  {0x2ced, {0x2cee, 0x0, 0x0}, 1},
  {0x2cf2, {0x2cf3, 0x0, 0x0}, 1},
  {0xa640, {0xa641, 0x0, 0x0}, 1},
  {0xa642, {0xa643, 0x0, 0x0}, 1},
  {0xa644, {0xa645, 0x0, 0x0}, 1},
  {0xa646, {0xa647, 0x0, 0x0}, 1},
  {0xa648, {0xa649, 0x0, 0x0}, 1},
  {0xa64a, {0xa64b, 0x0, 0x0}, 1},
  {0xa64c, {0xa64d, 0x0, 0x0}, 1},
  {0xa64e, {0xa64f, 0x0, 0x0}, 1},
  {0xa650, {0xa651, 0x0, 0x0}, 1},
  {0xa652, {0xa653, 0x0, 0x0}, 1},
  {0xa654, {0xa655, 0x0, 0x0}, 1},
  {0xa656, {0xa657, 0x0, 0x0}, 1},
  {0xa658, {0xa659, 0x0, 0x0}, 1},
  {0xa65a, {0xa65b, 0x0, 0x0}, 1},
  {0xa65c, {0xa65d, 0x0, 0x0}, 1},
  {0xa65e, {0xa65f, 0x0, 0x0}, 1},
  {0xa660, {0xa661, 0x0, 0x0}, 1},
  {0xa662, {0xa663, 0x0, 0x0}, 1},
  {0xa664, {0xa665, 0x0, 0x0}, 1},
  {0xa666, {0xa667, 0x0, 0x0}, 1},
  {0xa668, {0xa669, 0x0, 0x0}, 1},
  {0xa66a, {0xa66b, 0x0, 0x0}, 1},
  {0xa66c, {0xa66d, 0x0, 0x0}, 1},
  {0xa680, {0xa681, 0x0, 0x0}, 1},
  {0xa682, {0xa683, 0x0, 0x0}, 1},
  {0xa684, {0xa685, 0x0, 0x0}, 1},
  {0xa686, {0xa687, 0x0, 0x0}, 1},
  {0xa688, {0xa689, 0x0, 0x0}, 1},
  {0xa68a, {0xa68b, 0x0, 0x0}, 1},
  {0xa68c, {0xa68d, 0x0, 0x0}, 1},
  {0xa68e, {0xa68f, 0x0, 0x0}, 1},
  {0xa690, {0xa691, 0x0, 0x0}, 1},
  {0xa692, {0xa693, 0x0, 0x0}, 1},
  {0xa694, {0xa695, 0x0, 0x0}, 1},
  {0xa696, {0xa697, 0x0, 0x0}, 1},
  {0xa698, {0xa699, 0x0, 0x0}, 1},
  {0xa69a, {0xa69b, 0x0, 0x0}, 1},
  {0xa722, {0xa723, 0x0, 0x0}, 1},
  {0xa724, {0xa725, 0x0, 0x0}, 1},
  {0xa726, {0xa727, 0x0, 0x0}, 1},
  {0xa728, {0xa729, 0x0, 0x0}, 1},
  {0xa72a, {0xa72b, 0x0, 0x0}, 1},
  {0xa72c, {0xa72d, 0x0, 0x0}, 1},
  {0xa72e, {0xa72f, 0x0, 0x0}, 1},
  {0xa732, {0xa733, 0x0, 0x0}, 1},
  {0xa734, {0xa735, 0x0, 0x0}, 1},
  {0xa736, {0xa737, 0x0, 0x0}, 1},
  {0xa738, {0xa739, 0x0, 0x0}, 1},
  {0xa73a, {0xa73b, 0x0, 0x0}, 1},
  {0xa73c, {0xa73d, 0x0, 0x0}, 1},
  {0xa73e, {0xa73f, 0x0, 0x0}, 1},
  {0xa740, {0xa741, 0x0, 0x0}, 1},
  {0xa742, {0xa743, 0x0, 0x0}, 1},
  {0xa744, {0xa745, 0x0, 0x0}, 1},
  {0xa746, {0xa747, 0x0, 0x0}, 1},
  {0xa748, {0xa749, 0x0, 0x0}, 1},
  {0xa74a, {0xa74b, 0x0, 0x0}, 1},
  {0xa74c, {0xa74d, 0x0, 0x0}, 1},
  {0xa74e, {0xa74f, 0x0, 0x0}, 1},
  {0xa750, {0xa751, 0x0, 0x0}, 1},
  {0xa752, {0xa753, 0x0, 0x0}, 1},
  {0xa754, {0xa755, 0x0, 0x0}, 1},
  {0xa756, {0xa757, 0x0, 0x0}, 1},
  {0xa758, {0xa759, 0x0, 0x0}, 1},
  {0xa75a, {0xa75b, 0x0, 0x0}, 1},
  {0xa75c, {0xa75d, 0x0, 0x0}, 1},
  {0xa75e, {0xa75f, 0x0, 0x0}, 1},
  {0xa760, {0xa761, 0x0, 0x0}, 1},
  {0xa762, {0xa763, 0x0, 0x0}, 1},
  {0xa764, {0xa765, 0x0, 0x0}, 1},
  {0xa766, {0xa767, 0x0, 0x0}, 1},
  {0xa768, {0xa769, 0x0, 0x0}, 1},
  {0xa76a, {0xa76b, 0x0, 0x0}, 1},
  {0xa76c, {0xa76d, 0x0, 0x0}, 1},
  {0xa76e, {0xa76f, 0x0, 0x0}, 1},
  {0xa779, {0xa77a, 0x0, 0x0}, 1},
  {0xa77b, {0xa77c, 0x0, 0x0}, 1},
  {0xa77d, {0x1d79, 0x0, 0x0}, 1},
  {0xa77e, {0xa77f, 0x0, 0x0}, 1},
  {0xa780, {0xa781, 0x0, 0x0}, 1},
  {0xa782, {0xa783, 0x0, 0x0}, 1},
  {0xa784, {0xa785, 0x0, 0x0}, 1},
  {0xa786, {0xa787, 0x0, 0x0}, 1},
  {0xa78b, {0xa78c, 0x0, 0x0}, 1},
  {0xa78d, {0x265, 0x0, 0x0}, 1},
  {0xa790, {0xa791, 0x0, 0x0}, 1},
  {0xa792, {0xa793, 0x0, 0x0}, 1},
  {0xa796, {0xa797, 0x0, 0x0}, 1},
  {0xa798, {0xa799, 0x0, 0x0}, 1},
  {0xa79a, {0xa79b, 0x0, 0x0}, 1},
  {0xa79c, {0xa79d, 0x0, 0x0}, 1},
  {0xa79e, {0xa79f, 0x0, 0x0}, 1},
  {0xa7a0, {0xa7a1, 0x0, 0x0}, 1},
  {0xa7a2, {0xa7a3, 0x0, 0x0}, 1},
  {0xa7a4, {0xa7a5, 0x0, 0x0}, 1},
  {0xa7a6, {0xa7a7, 0x0, 0x0}, 1},
  {0xa7a8, {0xa7a9, 0x0, 0x0}, 1},
  {0xa7aa, {0x266, 0x0, 0x0}, 1},
  {0xa7ab, {0x25c, 0x0, 0x0}, 1},
  {0xa7ac, {0x261, 0x0, 0x0}, 1},
  {0xa7ad, {0x26c, 0x0, 0x0}, 1},
  {0xa7ae, {0x26a, 0x0, 0x0}, 1},
  {0xa7b0, {0x29e, 0x0, 0x0}, 1},
  {0xa7b1, {0x287, 0x0, 0x0}, 1},
  {0xa7b2, {0x29d, 0x0, 0x0}, 1},
  {0xa7b3, {0xab53, 0x0, 0x0}, 1},
  {0xa7b4, {0xa7b5, 0x0, 0x0}, 1},
  {0xa7b6, {0xa7b7, 0x0, 0x0}, 1},
  {0xa7b8, {0xa7b9, 0x0, 0x0}, 1},
  {0xa7ba, {0xa7bb, 0x0, 0x0}, 1},
  {0xa7bc, {0xa7bd, 0x0, 0x0}, 1},
  {0xa7be, {0xa7bf, 0x0, 0x0}, 1},
  {0xa7c2, {0xa7c3, 0x0, 0x0}, 1},
  {0xa7c4, {0xa794, 0x0, 0x0}, 1},
  {0xa7c5, {0x282, 0x0, 0x0}, 1},
  {0xa7c6, {0x1d8e, 0x0, 0x0}, 1},
  {0xa7c7, {0xa7c8, 0x0, 0x0}, 1},
  {0xa7c9, {0xa7ca, 0x0, 0x0}, 1},
  {0xa7f5, {0xa7f6, 0x0, 0x0}, 1},
  {0xab70, {0x13a0, 0x0, 0x0}, 1},
  {0xab71, {0x13a1, 0x0, 0x0}, 1},
  {0xab72, {0x13a2, 0x0, 0x0}, 1},
  {0xab73, {0x13a3, 0x0, 0x0}, 1},
  {0xab74, {0x13a4, 0x0, 0x0}, 1},
  {0xab75, {0x13a5, 0x0, 0x0}, 1},
  {0xab76, {0x13a6, 0x0, 0x0}, 1},
  {0xab77, {0x13a7, 0x0, 0x0}, 1},
  {0xab78, {0x13a8, 0x0, 0x0}, 1},
  {0xab79, {0x13a9, 0x0, 0x0}, 1},
  {0xab7a, {0x13aa, 0x0, 0x0}, 1},
  {0xab7b, {0x13ab, 0x0, 0x0}, 1},
  {0xab7c, {0x13ac, 0x0, 0x0}, 1},
  {0xab7d, {0x13ad, 0x0, 0x0}, 1},
  {0xab7e, {0x13ae, 0x0, 0x0}, 1},
  {0xab7f, {0x13af, 0x0, 0x0}, 1},
  {0xab80, {0x13b0, 0x0, 0x0}, 1},
  {0xab81, {0x13b1, 0x0, 0x0}, 1},
  {0xab82, {0x13b2, 0x0, 0x0}, 1},
  {0xab83, {0x13b3, 0x0, 0x0}, 1},
  {0xab84, {0x13b4, 0x0, 0x0}, 1},
  {0xab85, {0x13b5, 0x0, 0x0}, 1},
  {0xab86, {0x13b6, 0x0, 0x0}, 1},
  {0xab87, {0x13b7, 0x0, 0x0}, 1},
  {0xab88, {0x13b8, 0x0, 0x0}, 1},
  {0xab89, {0x13b9, 0x0, 0x0}, 1},
  {0xab8a, {0x13ba, 0x0, 0x0}, 1},
  {0xab8b, {0x13bb, 0x0, 0x0}, 1},
  {0xab8c, {0x13bc, 0x0, 0x0}, 1},
  {0xab8d, {0x13bd, 0x0, 0x0}, 1},
  {0xab8e, {0x13be, 0x0, 0x0}, 1},
  {0xab8f, {0x13bf, 0x0, 0x0}, 1},
  {0xab90, {0x13c0, 0x0, 0x0}, 1},
  {0xab91, {0x13c1, 0x0, 0x0}, 1},
  {0xab92, {0x13c2, 0x0, 0x0}, 1},
  {0xab93, {0x13c3, 0x0, 0x0}, 1},
  {0xab94, {0x13c4, 0x0, 0x0}, 1},
  {0xab95, {0x13c5, 0x0, 0x0}, 1},
  {0xab96, {0x13c6, 0x0, 0x0}, 1},
  {0xab97, {0x13c7, 0x0, 0x0}, 1},
  {0xab98, {0x13c8, 0x0, 0x0}, 1},
  {0xab99, {0x13c9, 0x0, 0x0}, 1},
  {0xab9a, {0x13ca, 0x0, 0x0}, 1},
  {0xab9b, {0x13cb, 0x0, 0x0}, 1},
  {0xab9c, {0x13cc, 0x0, 0x0}, 1},
  {0xab9d, {0x13cd, 0x0, 0x0}, 1},
  {0xab9e, {0x13ce, 0x0, 0x0}, 1},
  {0xab9f, {0x13cf, 0x0, 0x0}, 1},
  {0xaba0, {0x13d0, 0x0, 0x0}, 1},
  {0xaba1, {0x13d1, 0x0, 0x0}, 1},
  {0xaba2, {0x13d2, 0x0, 0x0}, 1},
  {0xaba3, {0x13d3, 0x0, 0x0}, 1},
  {0xaba4, {0x13d4, 0x0, 0x0}, 1},
  {0xaba5, {0x13d5, 0x0, 0x0}, 1},
  {0xaba6, {0x13d6, 0x0, 0x0}, 1},
  {0xaba7, {0x13d7, 0x0, 0x0}, 1},
  {0xaba8, {0x13d8, 0x0, 0x0}, 1},
  {0xaba9, {0x13d9, 0x0, 0x0}, 1},
  {0xabaa, {0x13da, 0x0, 0x0}, 1},
  {0xabab, {0x13db, 0x0, 0x0}, 1},
  {0xabac, {0x13dc, 0x0, 0x0}, 1},
  {0xabad, {0x13dd, 0x0, 0x0}, 1},
  {0xabae, {0x13de, 0x0, 0x0}, 1},
  {0xabaf, {0x13df, 0x0, 0x0}, 1},
  {0xabb0, {0x13e0, 0x0, 0x0}, 1},
  {0xabb1, {0x13e1, 0x0, 0x0}, 1},
  {0xabb2, {0x13e2, 0x0, 0x0}, 1},
  {0xabb3, {0x13e3, 0x0, 0x0}, 1},
  {0xabb4, {0x13e4, 0x0, 0x0}, 1},
  {0xabb5, {0x13e5, 0x0, 0x0}, 1},
  {0xabb6, {0x13e6, 0x0, 0x0}, 1},
  {0xabb7, {0x13e7, 0x0, 0x0}, 1},
  {0xabb8, {0x13e8, 0x0, 0x0}, 1},
  {0xabb9, {0x13e9, 0x0, 0x0}, 1},
  {0xabba, {0x13ea, 0x0, 0x0}, 1},
  {0xabbb, {0x13eb, 0x0, 0x0}, 1},
  {0xabbc, {0x13ec, 0x0, 0x0}, 1},
  {0xabbd, {0x13ed, 0x0, 0x0}, 1},
  {0xabbe, {0x13ee, 0x0, 0x0}, 1},
  {0xabbf, {0x13ef, 0x0, 0x0}, 1},
  {0xfb00, {0x66, 0x66, 0x0}, 2},
  {0xfb01, {0x66, 0x69, 0x0}, 2},
  {0xfb02, {0x66, 0x6c, 0x0}, 2},
  {0xfb03, {0x66, 0x66, 0x69}, 3},
  {0xfb04, {0x66, 0x66, 0x6c}, 3},
  {0xfb05, {0x73, 0x74, 0x0}, 2},
  {0xfb06, {0x73, 0x74, 0x0}, 2},
  {0xfb13, {0x574, 0x576, 0x0}, 2},
  {0xfb14, {0x574, 0x565, 0x0}, 2},
  {0xfb15, {0x574, 0x56b, 0x0}, 2},
  {0xfb16, {0x57e, 0x576, 0x0}, 2},
  {0xfb17, {0x574, 0x56d, 0x0}, 2},
  {0xff21, {0xff41, 0x0, 0x0}, 1},
  {0xff22, {0xff42, 0x0, 0x0}, 1},
  {0xff23, {0xff43, 0x0, 0x0}, 1},
  {0xff24, {0xff44, 0x0, 0x0}, 1},
  {0xff25, {0xff45, 0x0, 0x0}, 1},
  {0xff26, {0xff46, 0x0, 0x0}, 1},
  {0xff27, {0xff47, 0x0, 0x0}, 1},
  {0xff28, {0xff48, 0x0, 0x0}, 1},
  {0xff29, {0xff49, 0x0, 0x0}, 1},
  {0xff2a, {0xff4a, 0x0, 0x0}, 1},
  {0xff2b, {0xff4b, 0x0, 0x0}, 1},
  {0xff2c, {0xff4c, 0x0, 0x0}, 1},
  {0xff2d, {0xff4d, 0x0, 0x0}, 1},
  {0xff2e, {0xff4e, 0x0, 0x0}, 1},
  {0xff2f, {0xff4f, 0x0, 0x0}, 1},
  {0xff30, {0xff50, 0x0, 0x0}, 1},
  {0xff31, {0xff51, 0x0, 0x0}, 1},
  {0xff32, {0xff52, 0x0, 0x0}, 1},
  {0xff33, {0xff53, 0x0, 0x0}, 1},
  {0xff34, {0xff54, 0x0, 0x0}, 1},
  {0xff35, {0xff55, 0x0, 0x0}, 1},
  {0xff36, {0xff56, 0x0, 0x0}, 1},
  {0xff37, {0xff57, 0x0, 0x0}, 1},
  {0xff38, {0xff58, 0x0, 0x0}, 1},
  {0xff39, {0xff59, 0x0, 0x0}, 1},
  {0xff3a, {0xff5a, 0x0, 0x0}, 1},
  {0x10400, {0x10428, 0x0, 0x0}, 1},
  {0x10401, {0x10429, 0x0, 0x0}, 1},
  {0x10402, {0x1042a, 0x0, 0x0}, 1},
  {0x10403, {0x1042b, 0x0, 0x0}, 1},
  {0x10404, {0x1042c, 0x0, 0x0}, 1},
  {0x10405, {0x1042d, 0x0, 0x0}, 1},
  {0x10406, {0x1042e, 0x0, 0x0}, 1},
  {0x10407, {0x1042f, 0x0, 0x0}, 1},
  {0x10408, {0x10430, 0x0, 0x0}, 1},
  {0x10409, {0x10431, 0x0, 0x0}, 1},
  {0x1040a, {0x10432, 0x0, 0x0}, 1},
  {0x1040b, {0x10433, 0x0, 0x0}, 1},
  {0x1040c, {0x10434, 0x0, 0x0}, 1},
  {0x1040d, {0x10435, 0x0, 0x0}, 1},
  {0x1040e, {0x10436, 0x0, 0x0}, 1},
  {0x1040f, {0x10437, 0x0, 0x0}, 1},
  {0x10410, {0x10438, 0x0, 0x0}, 1},
  {0x10411, {0x10439, 0x0, 0x0}, 1},
  {0x10412, {0x1043a, 0x0, 0x0}, 1},
  {0x10413, {0x1043b, 0x0, 0x0}, 1},
  {0x10414, {0x1043c, 0x0, 0x0}, 1},
  {0x10415, {0x1043d, 0x0, 0x0}, 1},
  {0x10416, {0x1043e, 0x0, 0x0}, 1},
  {0x10417, {0x1043f, 0x0, 0x0}, 1},
  {0x10418, {0x10440, 0x0, 0x0}, 1},
  {0x10419, {0x10441, 0x0, 0x0}, 1},
  {0x1041a, {0x10442, 0x0, 0x0}, 1},
  {0x1041b, {0x10443, 0x0, 0x0}, 1},
  {0x1041c, {0x10444, 0x0, 0x0}, 1},
  {0x1041d, {0x10445, 0x0, 0x0}, 1},
  {0x1041e, {0x10446, 0x0, 0x0}, 1},
  {0x1041f, {0x10447, 0x0, 0x0}, 1},
  {0x10420, {0x10448, 0x0, 0x0}, 1},
  {0x10421, {0x10449, 0x0, 0x0}, 1},
  {0x10422, {0x1044a, 0x0, 0x0}, 1},
  {0x10423, {0x1044b, 0x0, 0x0}, 1},
  {0x10424, {0x1044c, 0x0, 0x0}, 1},
  {0x10425, {0x1044d, 0x0, 0x0}, 1},
  {0x10426, {0x1044e, 0x0, 0x0}, 1},
  {0x10427, {0x1044f, 0x0, 0x0}, 1},
  {0x104b0, {0x104d8, 0x0, 0x0}, 1},
  {0x104b1, {0x104d9, 0x0, 0x0}, 1},
  {0x104b2, {0x104da, 0x0, 0x0}, 1},
  {0x104b3, {0x104db, 0x0, 0x0}, 1},
  {0x104b4, {0x104dc, 0x0, 0x0}, 1},
  {0x104b5, {0x104dd, 0x0, 0x0}, 1},
  {0x104b6, {0x104de, 0x0, 0x0}, 1},
  {0x104b7, {0x104df, 0x0, 0x0}, 1},
  {0x104b8, {0x104e0, 0x0, 0x0}, 1},
  {0x104b9, {0x104e1, 0x0, 0x0}, 1},
  {0x104ba, {0x104e2, 0x0, 0x0}, 1},
  {0x104bb, {0x104e3, 0x0, 0x0}, 1},
  {0x104bc, {0x104e4, 0x0, 0x0}, 1},
  {0x104bd, {0x104e5, 0x0, 0x0}, 1},
  {0x104be, {0x104e6, 0x0, 0x0}, 1},
  {0x104bf, {0x104e7, 0x0, 0x0}, 1},
  {0x104c0, {0x104e8, 0x0, 0x0}, 1},
  {0x104c1, {0x104e9, 0x0, 0x0}, 1},
  {0x104c2, {0x104ea, 0x0, 0x0}, 1},
  {0x104c3, {0x104eb, 0x0, 0x0}, 1},
  {0x104c4, {0x104ec, 0x0, 0x0}, 1},
  {0x104c5, {0x104ed, 0x0, 0x0}, 1},
  {0x104c6, {0x104ee, 0x0, 0x0}, 1},
  {0x104c7, {0x104ef, 0x0, 0x0}, 1},
  {0x104c8, {0x104f0, 0x0, 0x0}, 1},
  {0x104c9, {0x104f1, 0x0, 0x0}, 1},
  {0x104ca, {0x104f2, 0x0, 0x0}, 1},
  {0x104cb, {0x104f3, 0x0, 0x0}, 1},
  {0x104cc, {0x104f4, 0x0, 0x0}, 1},
  {0x104cd, {0x104f5, 0x0, 0x0}, 1},
  {0x104ce, {0x104f6, 0x0, 0x0}, 1},
  {0x104cf, {0x104f7, 0x0, 0x0}, 1},
  {0x104d0, {0x104f8, 0x0, 0x0}, 1},
  {0x104d1, {0x104f9, 0x0, 0x0}, 1},
  {0x104d2, {0x104fa, 0x0, 0x0}, 1},
  {0x104d3, {0x104fb, 0x0, 0x0}, 1},
  {0x10c80, {0x10cc0, 0x0, 0x0}, 1},
  {0x10c81, {0x10cc1, 0x0, 0x0}, 1},
  {0x10c82, {0x10cc2, 0x0, 0x0}, 1},
  {0x10c83, {0x10cc3, 0x0, 0x0}, 1},
  {0x10c84, {0x10cc4, 0x0, 0x0}, 1},
  {0x10c85, {0x10cc5, 0x0, 0x0}, 1},
  {0x10c86, {0x10cc6, 0x0, 0x0}, 1},
  {0x10c87, {0x10cc7, 0x0, 0x0}, 1},
  {0x10c88, {0x10cc8, 0x0, 0x0}, 1},
  {0x10c89, {0x10cc9, 0x0, 0x0}, 1},
  {0x10c8a, {0x10cca, 0x0, 0x0}, 1},
  {0x10c8b, {0x10ccb, 0x0, 0x0}, 1},
  {0x10c8c, {0x10ccc, 0x0, 0x0}, 1},
  {0x10c8d, {0x10ccd, 0x0, 0x0}, 1},
  {0x10c8e, {0x10cce, 0x0, 0x0}, 1},
  {0x10c8f, {0x10ccf, 0x0, 0x0}, 1},
  {0x10c90, {0x10cd0, 0x0, 0x0}, 1},
  {0x10c91, {0x10cd1, 0x0, 0x0}, 1},
  {0x10c92, {0x10cd2, 0x0, 0x0}, 1},
  {0x10c93, {0x10cd3, 0x0, 0x0}, 1},
  {0x10c94, {0x10cd4, 0x0, 0x0}, 1},
  {0x10c95, {0x10cd5, 0x0, 0x0}, 1},
  {0x10c96, {0x10cd6, 0x0, 0x0}, 1},
  {0x10c97, {0x10cd7, 0x0, 0x0}, 1},
  {0x10c98, {0x10cd8, 0x0, 0x0}, 1},
  {0x10c99, {0x10cd9, 0x0, 0x0}, 1},
  {0x10c9a, {0x10cda, 0x0, 0x0}, 1},
  {0x10c9b, {0x10cdb, 0x0, 0x0}, 1},
  {0x10c9c, {0x10cdc, 0x0, 0x0}, 1},
  {0x10c9d, {0x10cdd, 0x0, 0x0}, 1},
  {0x10c9e, {0x10cde, 0x0, 0x0}, 1},
  {0x10c9f, {0x10cdf, 0x0, 0x0}, 1},
  {0x10ca0, {0x10ce0, 0x0, 0x0}, 1},
  {0x10ca1, {0x10ce1, 0x0, 0x0}, 1},
  {0x10ca2, {0x10ce2, 0x0, 0x0}, 1},
  {0x10ca3, {0x10ce3, 0x0, 0x0}, 1},
  {0x10ca4, {0x10ce4, 0x0, 0x0}, 1},
  {0x10ca5, {0x10ce5, 0x0, 0x0}, 1},
  {0x10ca6, {0x10ce6, 0x0, 0x0}, 1},
  {0x10ca7, {0x10ce7, 0x0, 0x0}, 1},
  {0x10ca8, {0x10ce8, 0x0, 0x0}, 1},
  {0x10ca9, {0x10ce9, 0x0, 0x0}, 1},
  {0x10caa, {0x10cea, 0x0, 0x0}, 1},
  {0x10cab, {0x10ceb, 0x0, 0x0}, 1},
  {0x10cac, {0x10cec, 0x0, 0x0}, 1},
  {0x10cad, {0x10ced, 0x0, 0x0}, 1},
  {0x10cae, {0x10cee, 0x0, 0x0}, 1},
  {0x10caf, {0x10cef, 0x0, 0x0}, 1},
  {0x10cb0, {0x10cf0, 0x0, 0x0}, 1},
  {0x10cb1, {0x10cf1, 0x0, 0x0}, 1},
  {0x10cb2, {0x10cf2, 0x0, 0x0}, 1},
  {0x118a0, {0x118c0, 0x0, 0x0}, 1},
  {0x118a1, {0x118c1, 0x0, 0x0}, 1},
  {0x118a2, {0x118c2, 0x0, 0x0}, 1},
  {0x118a3, {0x118c3, 0x0, 0x0}, 1},
  {0x118a4, {0x118c4, 0x0, 0x0}, 1},
  {0x118a5, {0x118c5, 0x0, 0x0}, 1},
  {0x118a6, {0x118c6, 0x0, 0x0}, 1},
  {0x118a7, {0x118c7, 0x0, 0x0}, 1},
  {0x118a8, {0x118c8, 0x0, 0x0}, 1},
  {0x118a9, {0x118c9, 0x0, 0x0}, 1},
  {0x118aa, {0x118ca, 0x0, 0x0}, 1},
  {0x118ab, {0x118cb, 0x0, 0x0}, 1},
  {0x118ac, {0x118cc, 0x0, 0x0}, 1},
  {0x118ad, {0x118cd, 0x0, 0x0}, 1},
  {0x118ae, {0x118ce, 0x0, 0x0}, 1},
  {0x118af, {0x118cf, 0x0, 0x0}, 1},
  {0x118b0, {0x118d0, 0x0, 0x0}, 1},
  {0x118b1, {0x118d1, 0x0, 0x0}, 1},
  {0x118b2, {0x118d2, 0x0, 0x0}, 1},
  {0x118b3, {0x118d3, 0x0, 0x0}, 1},
  {0x118b4, {0x118d4, 0x0, 0x0}, 1},
  {0x118b5, {0x118d5, 0x0, 0x0}, 1},
  {0x118b6, {0x118d6, 0x0, 0x0}, 1},
  {0x118b7, {0x118d7, 0x0, 0x0}, 1},
  {0x118b8, {0x118d8, 0x0, 0x0}, 1},
  {0x118b9, {0x118d9, 0x0, 0x0}, 1},
  {0x118ba, {0x118da, 0x0, 0x0}, 1},
  {0x118bb, {0x118db, 0x0, 0x0}, 1},
  {0x118bc, {0x118dc, 0x0, 0x0}, 1},
  {0x118bd, {0x118dd, 0x0, 0x0}, 1},
  {0x118be, {0x118de, 0x0, 0x0}, 1},
  {0x118bf, {0x118df, 0x0, 0x0}, 1},
  {0x16e40, {0x16e60, 0x0, 0x0}, 1},
  {0x16e41, {0x16e61, 0x0, 0x0}, 1},
  {0x16e42, {0x16e62, 0x0, 0x0}, 1},
  {0x16e43, {0x16e63, 0x0, 0x0}, 1},
  {0x16e44, {0x16e64, 0x0, 0x0}, 1},
  {0x16e45, {0x16e65, 0x0, 0x0}, 1},
  {0x16e46, {0x16e66, 0x0, 0x0}, 1},
  {0x16e47, {0x16e67, 0x0, 0x0}, 1},
  {0x16e48, {0x16e68, 0x0, 0x0}, 1},
  {0x16e49, {0x16e69, 0x0, 0x0}, 1},
  {0x16e4a, {0x16e6a, 0x0, 0x0}, 1},
  {0x16e4b, {0x16e6b, 0x0, 0x0}, 1},
  {0x16e4c, {0x16e6c, 0x0, 0x0}, 1},
  {0x16e4d, {0x16e6d, 0x0, 0x0}, 1},
  {0x16e4e, {0x16e6e, 0x0, 0x0}, 1},
  {0x16e4f, {0x16e6f, 0x0, 0x0}, 1},
  {0x16e50, {0x16e70, 0x0, 0x0}, 1},
  {0x16e51, {0x16e71, 0x0, 0x0}, 1},
  {0x16e52, {0x16e72, 0x0, 0x0}, 1},
  {0x16e53, {0x16e73, 0x0, 0x0}, 1},
  {0x16e54, {0x16e74, 0x0, 0x0}, 1},
  {0x16e55, {0x16e75, 0x0, 0x0}, 1},
  {0x16e56, {0x16e76, 0x0, 0x0}, 1},
  {0x16e57, {0x16e77, 0x0, 0x0}, 1},
  {0x16e58, {0x16e78, 0x0, 0x0}, 1},
  {0x16e59, {0x16e79, 0x0, 0x0}, 1},
  {0x16e5a, {0x16e7a, 0x0, 0x0}, 1},
  {0x16e5b, {0x16e7b, 0x0, 0x0}, 1},
  {0x16e5c, {0x16e7c, 0x0, 0x0}, 1},
  {0x16e5d, {0x16e7d, 0x0, 0x0}, 1},
  {0x16e5e, {0x16e7e, 0x0, 0x0}, 1},
  {0x16e5f, {0x16e7f, 0x0, 0x0}, 1},
  {0x1e900, {0x1e922, 0x0, 0x0}, 1},
  {0x1e901, {0x1e923, 0x0, 0x0}, 1},
  {0x1e902, {0x1e924, 0x0, 0x0}, 1},
  {0x1e903, {0x1e925, 0x0, 0x0}, 1},
  {0x1e904, {0x1e926, 0x0, 0x0}, 1},
  {0x1e905, {0x1e927, 0x0, 0x0}, 1},
  {0x1e906, {0x1e928, 0x0, 0x0}, 1},
  {0x1e907, {0x1e929, 0x0, 0x0}, 1},
  {0x1e908, {0x1e92a, 0x0, 0x0}, 1},
  {0x1e909, {0x1e92b, 0x0, 0x0}, 1},
  {0x1e90a, {0x1e92c, 0x0, 0x0}, 1},
  {0x1e90b, {0x1e92d, 0x0, 0x0}, 1},
  {0x1e90c, {0x1e92e, 0x0, 0x0}, 1},
  {0x1e90d, {0x1e92f, 0x0, 0x0}, 1},
  {0x1e90e, {0x1e930, 0x0, 0x0}, 1},
  {0x1e90f, {0x1e931, 0x0, 0x0}, 1},
  {0x1e910, {0x1e932, 0x0, 0x0}, 1},
  {0x1e911, {0x1e933, 0x0, 0x0}, 1},
  {0x1e912, {0x1e934, 0x0, 0x0}, 1},
  {0x1e913, {0x1e935, 0x0, 0x0}, 1},
  {0x1e914, {0x1e936, 0x0, 0x0}, 1},
  {0x1e915, {0x1e937, 0x0, 0x0}, 1},
  {0x1e916, {0x1e938, 0x0, 0x0}, 1},
  {0x1e917, {0x1e939, 0x0, 0x0}, 1},
  {0x1e918, {0x1e93a, 0x0, 0x0}, 1},
  {0x1e919, {0x1e93b, 0x0, 0x0}, 1},
  {0x1e91a, {0x1e93c, 0x0, 0x0}, 1},
  {0x1e91b, {0x1e93d, 0x0, 0x0}, 1},
  {0x1e91c, {0x1e93e, 0x0, 0x0}, 1},
  {0x1e91d, {0x1e93f, 0x0, 0x0}, 1},
  {0x1e91e, {0x1e940, 0x0, 0x0}, 1},
  {0x1e91f, {0x1e941, 0x0, 0x0}, 1},
  {0x1e920, {0x1e942, 0x0, 0x0}, 1},
  {0x1e921, {0x1e943, 0x0, 0x0}, 1},
};

struct AsciiFoldEntry {
  char32_t cp;
  std::uint32_t offset;
  std::uint8_t len;
};

inline constexpr char kAsciiFoldPool[] =
    " a231o141234AAECEIDNOUYTHssaeceidnuythGgHhIJijJjKkLlNGngOEoeRrSsTtWwZzbD"
    "ZDzdzLJLjljNJNjnjx;BMPmpvfFVXSS`......!!\077\077\077!!\0770456789+=()Rsa/ca/sc/oc/uN"
    "oQSMTELTMFAX1719110132315253545165618385878IIIIIIVVIVIIVIIIIXXIXIIiiiiii"
    "vviviiviiiixxixii03<>101120(1)(2)(3)(4)(5)(6)(7)(8)(9)(10)(11)(12)(13)(1"
    "4)(15)(16)(17)(18)(19)(20)1.2.3.4.5.6.7.8.9.10.11.12.13.14.15.16.17.18.1"
    "9.20.(a)(b)(c)(d)(e)(f)(g)(h)(i)(j)(k)(l)(m)(n)(o)(p)(q)(r)(s)(t)(u)(v)("
    "w)(x)(y)(z)q::======()PTE21222426272829303132333637394041424344464748495"
    "0HgergeVLTDhPadaAUbaroVpcdmdm2dm3IUpAnAmAkAKBMBGBcalkcalpFnFmgkgHzkHzMHz"
    "GHzTHzmldlklfmnmmmcmkmmm2cm2m2km2mm3cm3m3km3msms2PakPaMPaGParadradsrads2"
    "psnspVnVmVkVMVpWnWmWkWMWa.m.BqcccdCkgCo.dBGyhaHPinKKKMktlmlnloglxmbmilmo"
    "lPHp.m.PPMPRsrSvWbVmAmgalfffiflffifflst   ,:!\077_{}[]#&*-\\$%@\"'/^|~0.0,1,2"
    ",3,4,5,6,7,8,9,(A)(B)(C)(D)(E)(F)(G)(H)(I)(J)(K)(L)(M)(N)(O)(P)(Q)(R)(S)"
    "(T)(U)(V)(W)(X)(Y)(Z)CDWZHVSDPPVWCMCMDMRDJ"
;

inline constexpr AsciiFoldEntry kAsciiFold[] = {
  {0xa0, 0, 1},
  {0xa8, 0, 1},
  {0xaa, 1, 1},
  {0xaf, 0, 1},
  {0xb2, 2, 1},
  {0xb3, 3, 1},
  {0xb4, 0, 1},
  {0xb8, 0, 1},
  {0xb9, 4, 1},
  {0xba, 5, 1},
  {0xbc, 6, 2},
  {0xbd, 8, 2},
  {0xbe, 10, 2},
  {0xc0, 12, 1},
  {0xc1, 12, 1},
  {0xc2, 12, 1},
  {0xc3, 12, 1},
  {0xc4, 12, 1},
  {0xc5, 12, 1},
  {0xc6, 13, 2},
  {0xc7, 15, 1},
  {0xc8, 16, 1},
  {0xc9, 16, 1},
  {0xca, 16, 1},
  {0xcb, 16, 1},
  {0xcc, 17, 1},
  {0xcd, 17, 1},
  {0xce, 17, 1},
  {0xcf, 17, 1},
  {0xd0, 18, 1},
  {0xd1, 19, 1},
  {0xd2, 20, 1},
  {0xd3, 20, 1},
  {0xd4, 20, 1},
  {0xd5, 20, 1},
  {0xd6, 20, 1},
  {0xd8, 20, 1},
  {0xd9, 21, 1},
  {0xda, 21, 1},
  {0xdb, 21, 1},
  {0xdc, 21, 1},
  {0xdd, 22, 1},
  {0xde, 23, 2},
  {0xdf, 25, 2},
  {0xe0, 1, 1},
  {0xe1, 1, 1},
  {0xe2, 1, 1},
  {0xe3, 1, 1},
  {0xe4, 1, 1},
  {0xe5, 1, 1},
  {0xe6, 27, 2},
  {0xe7, 29, 1},
  {0xe8, 30, 1},
  {0xe9, 30, 1},
  {0xea, 30, 1},
  {0xeb, 30, 1},
  {0xec, 31, 1},
  {0xed, 31, 1},
  {0xee, 31, 1},
  {0xef, 31, 1},
  {0xf0, 32, 1},
  {0xf1, 33, 1},
  {0xf2, 5, 1},
  {0xf3, 5, 1},
  {0xf4, 5, 1},
  {0xf5, 5, 1},
  {0xf6, 5, 1},
  {0xf8, 5, 1},
  {0xf9, 34, 1},
  {0xfa, 34, 1},
  {0xfb, 34, 1},
  {0xfc, 34, 1},
  {0xfd, 35, 1},
  {0xfe, 36, 2},
  {0xff, 35, 1},
  {0x100, 12, 1},
  {0x101, 1, 1},
  {0x102, 12, 1},
  {0x103, 1, 1},
  {0x104, 12, 1},
  {0x105, 1, 1},
  {0x106, 15, 1},
  {0x107, 29, 1},
  {0x108, 15, 1},
  {0x109, 29, 1},
  {0x10a, 15, 1},
  {0x10b, 29, 1},
  {0x10c, 15, 1},
  {0x10d, 29, 1},
  {0x10e, 18, 1},
  {0x10f, 32, 1},
  {0x110, 18, 1},
  {0x111, 32, 1},
  {0x112, 16, 1},
  {0x113, 30, 1},
  {0x114, 16, 1},
  {0x115, 30, 1},
  {0x116, 16, 1},
  {0x117, 30, 1},
  {0x118, 16, 1},
  {0x119, 30, 1},
  {0x11a, 16, 1},
  {0x11b, 30, 1},
  {0x11c, 38, 1},
  {0x11d, 39, 1},
  {0x11e, 38, 1},
  {0x11f, 39, 1},
  {0x120, 38, 1},
  {0x121, 39, 1},
  {0x122, 38, 1},
  {0x123, 39, 1},
  {0x124, 40, 1},
  {0x125, 41, 1},
  {0x126, 40, 1},
  {0x127, 41, 1},
  {0x128, 17, 1},
  {0x129, 31, 1},
  {0x12a, 17, 1},
  {0x12b, 31, 1},
  {0x12c, 17, 1},
  {0x12d, 31, 1},
  {0x12e, 17, 1},
  {0x12f, 31, 1},
  {0x130, 17, 1},
  {0x131, 31, 1},
  {0x132, 42, 2},
  {0x133, 44, 2},
  {0x134, 46, 1},
  {0x135, 47, 1},
  {0x136, 48, 1},
  {0x137, 49, 1},
  {0x138, 49, 1},
  {0x139, 50, 1},
  {0x13a, 51, 1},
  {0x13b, 50, 1},
  {0x13c, 51, 1},
  {0x13d, 50, 1},
  {0x13e, 51, 1},
  {0x13f, 50, 1},
  {0x140, 51, 1},
  {0x141, 50, 1},
  {0x142, 51, 1},
  {0x143, 19, 1},
  {0x144, 33, 1},
  {0x145, 19, 1},
  {0x146, 33, 1},
  {0x147, 19, 1},
  {0x148, 33, 1},
  {0x149, 33, 1},
  {0x14a, 52, 2},
  {0x14b, 54, 2},
  {0x14c, 20, 1},
  {0x14d, 5, 1},
  {0x14e, 20, 1},
  {0x14f, 5, 1},
  {0x150, 20, 1},
  {0x151, 5, 1},
  {0x152, 56, 2},
  {0x153, 58, 2},
  {0x154, 60, 1},
  {0x155, 61, 1},
  {0x156, 60, 1},
  {0x157, 61, 1},
  {0x158, 60, 1},
  {0x159, 61, 1},
  {0x15a, 62, 1},
  {0x15b, 63, 1},
  {0x15c, 62, 1},
  {0x15d, 63, 1},
  {0x15e, 62, 1},
  {0x15f, 63, 1},
  {0x160, 62, 1},
  {0x161, 63, 1},
  {0x162, 64, 1},
  {0x163, 65, 1},
  {0x164, 64, 1},
  {0x165, 65, 1},
  {0x166, 64, 1},
  {0x167, 65, 1},
  {0x168, 21, 1},
  {0x169, 34, 1},
  {0x16a, 21, 1},
  {0x16b, 34, 1},
  {0x16c, 21, 1},
  {0x16d, 34, 1},
  {0x16e, 21, 1},
  {0x16f, 34, 1},
  {0x170, 21, 1},
  {0x171, 34, 1},
  {0x172, 21, 1},
  {0x173, 34, 1},
  {0x174, 66, 1},
  {0x175, 67, 1},
  {0x176, 22, 1},
  {0x177, 35, 1},
  {0x178, 22, 1},
  {0x179, 68, 1},
  {0x17a, 69, 1},
  {0x17b, 68, 1},
  {0x17c, 69, 1},
  {0x17d, 68, 1},
  {0x17e, 69, 1},
  {0x17f, 63, 1},
  {0x180, 70, 1},
  {0x197, 17, 1},
  {0x1a0, 20, 1},
  {0x1a1, 5, 1},
  {0x1af, 21, 1},
  {0x1b0, 34, 1},
  {0x1c4, 71, 2},
  {0x1c5, 73, 2},
  {0x1c6, 75, 2},
  {0x1c7, 77, 2},
  {0x1c8, 79, 2},
  {0x1c9, 81, 2},
  {0x1ca, 83, 2},
  {0x1cb, 85, 2},
  {0x1cc, 87, 2},
  {0x1cd, 12, 1},
  {0x1ce, 1, 1},
  {0x1cf, 17, 1},
  {0x1d0, 31, 1},
  {0x1d1, 20, 1},
  {0x1d2, 5, 1},
  {0x1d3, 21, 1},
  {0x1d4, 34, 1},
  {0x1d5, 21, 1},
  {0x1d6, 34, 1},
  {0x1d7, 21, 1},
  {0x1d8, 34, 1},
  {0x1d9, 21, 1},
  {0x1da, 34, 1},
  {0x1db, 21, 1},
  {0x1dc, 34, 1},
  {0x1de, 12, 1},
  {0x1df, 1, 1},
  {0x1e0, 12, 1},
  {0x1e1, 1, 1},
  {0x1e2, 13, 2},
  {0x1e3, 27, 2},
  {0x1e4, 38, 1},
  {0x1e5, 39, 1},
  {0x1e6, 38, 1},
  {0x1e7, 39, 1},
  {0x1e8, 48, 1},
  {0x1e9, 49, 1},
  {0x1ea, 20, 1},
  {0x1eb, 5, 1},
  {0x1ec, 20, 1},
  {0x1ed, 5, 1},
  {0x1f0, 47, 1},
  {0x1f1, 71, 2},
  {0x1f2, 73, 2},
  {0x1f3, 75, 2},
  {0x1f4, 38, 1},
  {0x1f5, 39, 1},
  {0x1f8, 19, 1},
  {0x1f9, 33, 1},
  {0x1fa, 12, 1},
  {0x1fb, 1, 1},
  {0x1fc, 13, 2},
  {0x1fd, 27, 2},
  {0x1fe, 20, 1},
  {0x1ff, 5, 1},
  {0x200, 12, 1},
  {0x201, 1, 1},
  {0x202, 12, 1},
  {0x203, 1, 1},
  {0x204, 16, 1},
  {0x205, 30, 1},
  {0x206, 16, 1},
  {0x207, 30, 1},
  {0x208, 17, 1},
  {0x209, 31, 1},
  {0x20a, 17, 1},
  {0x20b, 31, 1},
  {0x20c, 20, 1},
  {0x20d, 5, 1},
  {0x20e, 20, 1},
  {0x20f, 5, 1},
  {0x210, 60, 1},
  {0x211, 61, 1},
  {0x212, 60, 1},
  {0x213, 61, 1},
  {0x214, 21, 1},
  {0x215, 34, 1},
  {0x216, 21, 1},
  {0x217, 34, 1},
  {0x218, 62, 1},
  {0x219, 63, 1},
  {0x21a, 64, 1},
  {0x21b, 65, 1},
  {0x21e, 40, 1},
  {0x21f, 41, 1},
  {0x226, 12, 1},
  {0x227, 1, 1},
  {0x228, 16, 1},
  {0x229, 30, 1},
  {0x22a, 20, 1},
  {0x22b, 5, 1},
  {0x22c, 20, 1},
  {0x22d, 5, 1},
  {0x22e, 20, 1},
  {0x22f, 5, 1},
  {0x230, 20, 1},
  {0x231, 5, 1},
  {0x232, 22, 1},
  {0x233, 35, 1},
  {0x268, 31, 1},
  {0x2b0, 41, 1},
  {0x2b2, 47, 1},
  {0x2b3, 61, 1},
  {0x2b7, 67, 1},
  {0x2b8, 35, 1},
  {0x2d8, 0, 1},
  {0x2d9, 0, 1},
  {0x2da, 0, 1},
  {0x2db, 0, 1},
  {0x2dc, 0, 1},
  {0x2dd, 0, 1},
  {0x2e1, 51, 1},
  {0x2e2, 63, 1},
  {0x2e3, 89, 1},
  {0x37a, 0, 1},
  {0x37e, 90, 1},
  {0x384, 0, 1},
  {0x385, 0, 1},
  {0x1d2c, 12, 1},
  {0x1d2d, 13, 2},
  {0x1d2e, 91, 1},
  {0x1d30, 18, 1},
  {0x1d31, 16, 1},
  {0x1d33, 38, 1},
  {0x1d34, 40, 1},
  {0x1d35, 17, 1},
  {0x1d36, 46, 1},
  {0x1d37, 48, 1},
  {0x1d38, 50, 1},
  {0x1d39, 92, 1},
  {0x1d3a, 19, 1},
  {0x1d3c, 20, 1},
  {0x1d3e, 93, 1},
  {0x1d3f, 60, 1},
  {0x1d40, 64, 1},
  {0x1d41, 21, 1},
  {0x1d42, 66, 1},
  {0x1d43, 1, 1},
  {0x1d47, 70, 1},
  {0x1d48, 32, 1},
  {0x1d49, 30, 1},
  {0x1d4d, 39, 1},
  {0x1d4f, 49, 1},
  {0x1d50, 94, 1},
  {0x1d51, 54, 2},
  {0x1d52, 5, 1},
  {0x1d56, 95, 1},
  {0x1d57, 65, 1},
  {0x1d58, 34, 1},
  {0x1d5b, 96, 1},
  {0x1d62, 31, 1},
  {0x1d63, 61, 1},
  {0x1d64, 34, 1},
  {0x1d65, 96, 1},
  {0x1d9c, 29, 1},
  {0x1d9e, 32, 1},
  {0x1da0, 97, 1},
  {0x1da4, 31, 1},
  {0x1dbb, 69, 1},
  {0x1e00, 12, 1},
  {0x1e01, 1, 1},
  {0x1e02, 91, 1},
  {0x1e03, 70, 1},
  {0x1e04, 91, 1},
  {0x1e05, 70, 1},
  {0x1e06, 91, 1},
  {0x1e07, 70, 1},
  {0x1e08, 15, 1},
  {0x1e09, 29, 1},
  {0x1e0a, 18, 1},
  {0x1e0b, 32, 1},
  {0x1e0c, 18, 1},
  {0x1e0d, 32, 1},
  {0x1e0e, 18, 1},
  {0x1e0f, 32, 1},
  {0x1e10, 18, 1},
  {0x1e11, 32, 1},
  {0x1e12, 18, 1},
  {0x1e13, 32, 1},
  {0x1e14, 16, 1},
  {0x1e15, 30, 1},
  {0x1e16, 16, 1},
  {0x1e17, 30, 1},
  {0x1e18, 16, 1},
  {0x1e19, 30, 1},
  {0x1e1a, 16, 1},
  {0x1e1b, 30, 1},
  {0x1e1c, 16, 1},
  {0x1e1d, 30, 1},
  {0x1e1e, 98, 1},
  {0x1e1f, 97, 1},
  {0x1e20, 38, 1},
  {0x1e21, 39, 1},
  {0x1e22, 40, 1},
  {0x1e23, 41, 1},
  {0x1e24, 40, 1},
  {0x1e25, 41, 1},
  {0x1e26, 40, 1},
  {0x1e27, 41, 1},
  {0x1e28, 40, 1},
  {0x1e29, 41, 1},
  {0x1e2a, 40, 1},
  {0x1e2b, 41, 1},
  {0x1e2c, 17, 1},
  {0x1e2d, 31, 1},
  {0x1e2e, 17, 1},
  {0x1e2f, 31, 1},
  {0x1e30, 48, 1},
  {0x1e31, 49, 1},
  {0x1e32, 48, 1},
  {0x1e33, 49, 1},
  {0x1e34, 48, 1},
  {0x1e35, 49, 1},
  {0x1e36, 50, 1},
  {0x1e37, 51, 1},
  {0x1e38, 50, 1},
  {0x1e39, 51, 1},
  {0x1e3a, 50, 1},
  {0x1e3b, 51, 1},
  {0x1e3c, 50, 1},
  {0x1e3d, 51, 1},
  {0x1e3e, 92, 1},
  {0x1e3f, 94, 1},
  {0x1e40, 92, 1},
  {0x1e41, 94, 1},
  {0x1e42, 92, 1},
  {0x1e43, 94, 1},
  {0x1e44, 19, 1},
  {0x1e45, 33, 1},
  {0x1e46, 19, 1},
  {0x1e47, 33, 1},
  {0x1e48, 19, 1},
  {0x1e49, 33, 1},
  {0x1e4a, 19, 1},
  {0x1e4b, 33, 1},
  {0x1e4c, 20, 1},
  {0x1e4d, 5, 1},
  {0x1e4e, 20, 1},
  {0x1e4f, 5, 1},
  {0x1e50, 20, 1},
  {0x1e51, 5, 1},
  {0x1e52, 20, 1},
  {0x1e53, 5, 1},
  {0x1e54, 93, 1},
  {0x1e55, 95, 1},
  {0x1e56, 93, 1},
  {0x1e57, 95, 1},
  {0x1e58, 60, 1},
  {0x1e59, 61, 1},
  {0x1e5a, 60, 1},
  {0x1e5b, 61, 1},
  {0x1e5c, 60, 1},
  {0x1e5d, 61, 1},
  {0x1e5e, 60, 1},
  {0x1e5f, 61, 1},
  {0x1e60, 62, 1},
  {0x1e61, 63, 1},
  {0x1e62, 62, 1},
  {0x1e63, 63, 1},
  {0x1e64, 62, 1},
  {0x1e65, 63, 1},
  {0x1e66, 62, 1},
  {0x1e67, 63, 1},
  {0x1e68, 62, 1},
  {0x1e69, 63, 1},
  {0x1e6a, 64, 1},
  {0x1e6b, 65, 1},
  {0x1e6c, 64, 1},
  {0x1e6d, 65, 1},
  {0x1e6e, 64, 1},
  {0x1e6f, 65, 1},
  {0x1e70, 64, 1},
  {0x1e71, 65, 1},
  {0x1e72, 21, 1},
  {0x1e73, 34, 1},
  {0x1e74, 21, 1},
  {0x1e75, 34, 1},
  {0x1e76, 21, 1},
  {0x1e77, 34, 1},
  {0x1e78, 21, 1},
  {0x1e79, 34, 1},
  {0x1e7a, 21, 1},
  {0x1e7b, 34, 1},
  {0x1e7c, 99, 1},
  {0x1e7d, 96, 1},
  {0x1e7e, 99, 1},
  {0x1e7f, 96, 1},
  {0x1e80, 66, 1},
  {0x1e81, 67, 1},
  {0x1e82, 66, 1},
  {0x1e83, 67, 1},
  {0x1e84, 66, 1},
  {0x1e85, 67, 1},
  {0x1e86, 66, 1},
  {0x1e87, 67, 1},
  {0x1e88, 66, 1},
  {0x1e89, 67, 1},
  {0x1e8a, 100, 1},
  {0x1e8b, 89, 1},
  {0x1e8c, 100, 1},
  {0x1e8d, 89, 1},
  {0x1e8e, 22, 1},
  {0x1e8f, 35, 1},
  {0x1e90, 68, 1},
  {0x1e91, 69, 1},
  {0x1e92, 68, 1},
  {0x1e93, 69, 1},
  {0x1e94, 68, 1},
  {0x1e95, 69, 1},
  {0x1e96, 41, 1},
  {0x1e97, 65, 1},
  {0x1e98, 67, 1},
  {0x1e99, 35, 1},
  {0x1e9a, 1, 1},
  {0x1e9b, 63, 1},
  {0x1e9e, 101, 2},
  {0x1ea0, 12, 1},
  {0x1ea1, 1, 1},
  {0x1ea2, 12, 1},
  {0x1ea3, 1, 1},
  {0x1ea4, 12, 1},
  {0x1ea5, 1, 1},
  {0x1ea6, 12, 1},
  {0x1ea7, 1, 1},
  {0x1ea8, 12, 1},
  {0x1ea9, 1, 1},
  {0x1eaa, 12, 1},
  {0x1eab, 1, 1},
  {0x1eac, 12, 1},
  {0x1ead, 1, 1},
  {0x1eae, 12, 1},
  {0x1eaf, 1, 1},
  {0x1eb0, 12, 1},
  {0x1eb1, 1, 1},
  {0x1eb2, 12, 1},
  {0x1eb3, 1, 1},
  {0x1eb4, 12, 1},
  {0x1eb5, 1, 1},
  {0x1eb6, 12, 1},
  {0x1eb7, 1, 1},
  {0x1eb8, 16, 1},
  {0x1eb9, 30, 1},
  {0x1eba, 16, 1},
  {0x1ebb, 30, 1},
  {0x1ebc, 16, 1},
  {0x1ebd, 30, 1},
  {0x1ebe, 16, 1},
  {0x1ebf, 30, 1},
  {0x1ec0, 16, 1},
  {0x1ec1, 30, 1},
  {0x1ec2, 16, 1},
  {0x1ec3, 30, 1},
  {0x1ec4, 16, 1},
  {0x1ec5, 30, 1},
  {0x1ec6, 16, 1},
  {0x1ec7, 30, 1},
  {0x1ec8, 17, 1},
  {0x1ec9, 31, 1},
  {0x1eca, 17, 1},
  {0x1ecb, 31, 1},
  {0x1ecc, 20, 1},
  {0x1ecd, 5, 1},
  {0x1ece, 20, 1},
  {0x1ecf, 5, 1},
  {0x1ed0, 20, 1},
  {0x1ed1, 5, 1},
  {0x1ed2, 20, 1},
  {0x1ed3, 5, 1},
  {0x1ed4, 20, 1},
  {0x1ed5, 5, 1},
  {0x1ed6, 20, 1},
  {0x1ed7, 5, 1},
  {0x1ed8, 20, 1},
  {0x1ed9, 5, 1},
  {0x1eda, 20, 1},
  {0x1edb, 5, 1},
  {0x1edc, 20, 1},
  {0x1edd, 5, 1},
  {0x1ede, 20, 1},
  {0x1edf, 5, 1},
  {0x1ee0, 20, 1},
  {0x1ee1, 5, 1},
  {0x1ee2, 20, 1},
  {0x1ee3, 5, 1},
  {0x1ee4, 21, 1},
  {0x1ee5, 34, 1},
  {0x1ee6, 21, 1},
  {0x1ee7, 34, 1},
  {0x1ee8, 21, 1},
  {0x1ee9, 34, 1},
  {0x1eea, 21, 1},
  {0x1eeb, 34, 1},
  {0x1eec, 21, 1},
  {0x1eed, 34, 1},
  {0x1eee, 21, 1},
  {0x1eef, 34, 1},
  {0x1ef0, 21, 1},
  {0x1ef1, 34, 1},
  {0x1ef2, 22, 1},
  {0x1ef3, 35, 1},
  {0x1ef4, 22, 1},
  {0x1ef5, 35, 1},
  {0x1ef6, 22, 1},
  {0x1ef7, 35, 1},
  {0x1ef8, 22, 1},
  {0x1ef9, 35, 1},
  {0x1fbd, 0, 1},
  {0x1fbf, 0, 1},
  {0x1fc0, 0, 1},
  {0x1fc1, 0, 1},
  {0x1fcd, 0, 1},
  {0x1fce, 0, 1},
  {0x1fcf, 0, 1},
  {0x1fdd, 0, 1},
  {0x1fde, 0, 1},
  {0x1fdf, 0, 1},
  {0x1fed, 0, 1},
  {0x1fee, 0, 1},
  {0x1fef, 103, 1},
  {0x1ffd, 0, 1},
  {0x1ffe, 0, 1},
  {0x2000, 0, 1},
  {0x2001, 0, 1},
  {0x2002, 0, 1},
  {0x2003, 0, 1},
  {0x2004, 0, 1},
  {0x2005, 0, 1},
  {0x2006, 0, 1},
  {0x2007, 0, 1},
  {0x2008, 0, 1},
  {0x2009, 0, 1},
  {0x200a, 0, 1},
  {0x2017, 0, 1},
  {0x2024, 104, 1},
  {0x2025, 105, 2},
  {0x2026, 107, 3},
  {0x202f, 0, 1},
  {0x203c, 110, 2},
  {0x203e, 0, 1},
  {0x2047, 112, 2},
  {0x2048, 114, 2},
  {0x2049, 116, 2},
  {0x205f, 0, 1},
  {0x2070, 118, 1},
  {0x2071, 31, 1},
  {0x2074, 119, 1},
  {0x2075, 120, 1},
  {0x2076, 121, 1},
  {0x2077, 122, 1},
  {0x2078, 123, 1},
  {0x2079, 124, 1},
  {0x207a, 125, 1},
  {0x207c, 126, 1},
  {0x207d, 127, 1},
  {0x207e, 128, 1},
  {0x207f, 33, 1},
  {0x2080, 118, 1},
  {0x2081, 4, 1},
  {0x2082, 2, 1},
  {0x2083, 3, 1},
  {0x2084, 119, 1},
  {0x2085, 120, 1},
  {0x2086, 121, 1},
  {0x2087, 122, 1},
  {0x2088, 123, 1},
  {0x2089, 124, 1},
  {0x208a, 125, 1},
  {0x208c, 126, 1},
  {0x208d, 127, 1},
  {0x208e, 128, 1},
  {0x2090, 1, 1},
  {0x2091, 30, 1},
  {0x2092, 5, 1},
  {0x2093, 89, 1},
  {0x2095, 41, 1},
  {0x2096, 49, 1},
  {0x2097, 51, 1},
  {0x2098, 94, 1},
  {0x2099, 33, 1},
  {0x209a, 95, 1},
  {0x209b, 63, 1},
  {0x209c, 65, 1},
  {0x20a8, 129, 2},
  {0x2100, 131, 3},
  {0x2101, 134, 3},
  {0x2102, 15, 1},
  {0x2103, 15, 1},
  {0x2105, 137, 3},
  {0x2106, 140, 3},
  {0x2109, 98, 1},
  {0x210a, 39, 1},
  {0x210b, 40, 1},
  {0x210c, 40, 1},
  {0x210d, 40, 1},
  {0x210e, 41, 1},
  {0x210f, 41, 1},
  {0x2110, 17, 1},
  {0x2111, 17, 1},
  {0x2112, 50, 1},
  {0x2113, 51, 1},
  {0x2115, 19, 1},
  {0x2116, 143, 2},
  {0x2119, 93, 1},
  {0x211a, 145, 1},
  {0x211b, 60, 1},
  {0x211c, 60, 1},
  {0x211d, 60, 1},
  {0x2120, 146, 2},
  {0x2121, 148, 3},
  {0x2122, 151, 2},
  {0x2124, 68, 1},
  {0x2128, 68, 1},
  {0x212a, 48, 1},
  {0x212b, 12, 1},
  {0x212c, 91, 1},
  {0x212d, 15, 1},
  {0x212f, 30, 1},
  {0x2130, 16, 1},
  {0x2131, 98, 1},
  {0x2133, 92, 1},
  {0x2134, 5, 1},
  {0x2139, 31, 1},
  {0x213b, 153, 3},
  {0x2145, 18, 1},
  {0x2146, 32, 1},
  {0x2147, 30, 1},
  {0x2148, 31, 1},
  {0x2149, 47, 1},
  {0x2150, 156, 2},
  {0x2151, 158, 2},
  {0x2152, 160, 3},
  {0x2153, 163, 2},
  {0x2154, 165, 2},
  {0x2155, 167, 2},
  {0x2156, 169, 2},
  {0x2157, 171, 2},
  {0x2158, 173, 2},
  {0x2159, 175, 2},
  {0x215a, 177, 2},
  {0x215b, 179, 2},
  {0x215c, 181, 2},
  {0x215d, 183, 2},
  {0x215e, 185, 2},
  {0x215f, 4, 1},
  {0x2160, 17, 1},
  {0x2161, 187, 2},
  {0x2162, 189, 3},
  {0x2163, 192, 2},
  {0x2164, 99, 1},
  {0x2165, 194, 2},
  {0x2166, 196, 3},
  {0x2167, 199, 4},
  {0x2168, 203, 2},
  {0x2169, 100, 1},
  {0x216a, 205, 2},
  {0x216b, 207, 3},
  {0x216c, 50, 1},
  {0x216d, 15, 1},
  {0x216e, 18, 1},
  {0x216f, 92, 1},
  {0x2170, 31, 1},
  {0x2171, 210, 2},
  {0x2172, 212, 3},
  {0x2173, 215, 2},
  {0x2174, 96, 1},
  {0x2175, 217, 2},
  {0x2176, 219, 3},
  {0x2177, 222, 4},
  {0x2178, 226, 2},
  {0x2179, 89, 1},
  {0x217a, 228, 2},
  {0x217b, 230, 3},
  {0x217c, 51, 1},
  {0x217d, 29, 1},
  {0x217e, 32, 1},
  {0x217f, 94, 1},
  {0x2189, 233, 2},
  {0x2260, 126, 1},
  {0x226e, 235, 1},
  {0x226f, 236, 1},
  {0x2460, 4, 1},
  {0x2461, 2, 1},
  {0x2462, 3, 1},
  {0x2463, 119, 1},
  {0x2464, 120, 1},
  {0x2465, 121, 1},
  {0x2466, 122, 1},
  {0x2467, 123, 1},
  {0x2468, 124, 1},
  {0x2469, 237, 2},
  {0x246a, 239, 2},
  {0x246b, 8, 2},
  {0x246c, 163, 2},
  {0x246d, 6, 2},
  {0x246e, 167, 2},
  {0x246f, 175, 2},
  {0x2470, 156, 2},
  {0x2471, 179, 2},
  {0x2472, 158, 2},
  {0x2473, 241, 2},
  {0x2474, 243, 3},
  {0x2475, 246, 3},
  {0x2476, 249, 3},
  {0x2477, 252, 3},
  {0x2478, 255, 3},
  {0x2479, 258, 3},
  {0x247a, 261, 3},
  {0x247b, 264, 3},
  {0x247c, 267, 3},
  {0x247d, 270, 4},
  {0x247e, 274, 4},
  {0x247f, 278, 4},
  {0x2480, 282, 4},
  {0x2481, 286, 4},
  {0x2482, 290, 4},
  {0x2483, 294, 4},
  {0x2484, 298, 4},
  {0x2485, 302, 4},
  {0x2486, 306, 4},
  {0x2487, 310, 4},
  {0x2488, 314, 2},
  {0x2489, 316, 2},
  {0x248a, 318, 2},
  {0x248b, 320, 2},
  {0x248c, 322, 2},
  {0x248d, 324, 2},
  {0x248e, 326, 2},
  {0x248f, 328, 2},
  {0x2490, 330, 2},
  {0x2491, 332, 3},
  {0x2492, 335, 3},
  {0x2493, 338, 3},
  {0x2494, 341, 3},
  {0x2495, 344, 3},
  {0x2496, 347, 3},
  {0x2497, 350, 3},
  {0x2498, 353, 3},
  {0x2499, 356, 3},
  {0x249a, 359, 3},
  {0x249b, 362, 3},
  {0x249c, 365, 3},
  {0x249d, 368, 3},
  {0x249e, 371, 3},
  {0x249f, 374, 3},
  {0x24a0, 377, 3},
  {0x24a1, 380, 3},
  {0x24a2, 383, 3},
  {0x24a3, 386, 3},
  {0x24a4, 389, 3},
  {0x24a5, 392, 3},
  {0x24a6, 395, 3},
  {0x24a7, 398, 3},
  {0x24a8, 401, 3},
  {0x24a9, 404, 3},
  {0x24aa, 407, 3},
  {0x24ab, 410, 3},
  {0x24ac, 413, 3},
  {0x24ad, 416, 3},
  {0x24ae, 419, 3},
  {0x24af, 422, 3},
  {0x24b0, 425, 3},
  {0x24b1, 428, 3},
  {0x24b2, 431, 3},
  {0x24b3, 434, 3},
  {0x24b4, 437, 3},
  {0x24b5, 440, 3},
  {0x24b6, 12, 1},
  {0x24b7, 91, 1},
  {0x24b8, 15, 1},
  {0x24b9, 18, 1},
  {0x24ba, 16, 1},
  {0x24bb, 98, 1},
  {0x24bc, 38, 1},
  {0x24bd, 40, 1},
  {0x24be, 17, 1},
  {0x24bf, 46, 1},
  {0x24c0, 48, 1},
  {0x24c1, 50, 1},
  {0x24c2, 92, 1},
  {0x24c3, 19, 1},
  {0x24c4, 20, 1},
  {0x24c5, 93, 1},
  {0x24c6, 145, 1},
  {0x24c7, 60, 1},
  {0x24c8, 62, 1},
  {0x24c9, 64, 1},
  {0x24ca, 21, 1},
  {0x24cb, 99, 1},
  {0x24cc, 66, 1},
  {0x24cd, 100, 1},
  {0x24ce, 22, 1},
  {0x24cf, 68, 1},
  {0x24d0, 1, 1},
  {0x24d1, 70, 1},
  {0x24d2, 29, 1},
  {0x24d3, 32, 1},
  {0x24d4, 30, 1},
  {0x24d5, 97, 1},
  {0x24d6, 39, 1},
  {0x24d7, 41, 1},
  {0x24d8, 31, 1},
  {0x24d9, 47, 1},
  {0x24da, 49, 1},
  {0x24db, 51, 1},
  {0x24dc, 94, 1},
  {0x24dd, 33, 1},
  {0x24de, 5, 1},
  {0x24df, 95, 1},
  {0x24e0, 443, 1},
  {0x24e1, 61, 1},
  {0x24e2, 63, 1},
  {0x24e3, 65, 1},
  {0x24e4, 34, 1},
  {0x24e5, 96, 1},
  {0x24e6, 67, 1},
  {0x24e7, 89, 1},
  {0x24e8, 35, 1},
  {0x24e9, 69, 1},
  {0x24ea, 118, 1},
  {0x2a74, 444, 3},
  {0x2a75, 447, 2},
  {0x2a76, 449, 3},
  {0x2c7c, 47, 1},
  {0x2c7d, 99, 1},
  {0x3000, 0, 1},
  {0x309b, 0, 1},
  {0x309c, 0, 1},
  {0x3200, 452, 2},
  {0x3201, 452, 2},
  {0x3202, 452, 2},
  {0x3203, 452, 2},
  {0x3204, 452, 2},
  {0x3205, 452, 2},
  {0x3206, 452, 2},
  {0x3207, 452, 2},
  {0x3208, 452, 2},
  {0x3209, 452, 2},
  {0x320a, 452, 2},
  {0x320b, 452, 2},
  {0x320c, 452, 2},
  {0x320d, 452, 2},
  {0x320e, 452, 2},
  {0x320f, 452, 2},
  {0x3210, 452, 2},
  {0x3211, 452, 2},
  {0x3212, 452, 2},
  {0x3213, 452, 2},
  {0x3214, 452, 2},
  {0x3215, 452, 2},
  {0x3216, 452, 2},
  {0x3217, 452, 2},
  {0x3218, 452, 2},
  {0x3219, 452, 2},
  {0x321a, 452, 2},
  {0x321b, 452, 2},
  {0x321c, 452, 2},
  {0x321d, 452, 2},
  {0x321e, 452, 2},
  {0x3220, 452, 2},
  {0x3221, 452, 2},
  {0x3222, 452, 2},
  {0x3223, 452, 2},
  {0x3224, 452, 2},
  {0x3225, 452, 2},
  {0x3226, 452, 2},
  {0x3227, 452, 2},
  {0x3228, 452, 2},
  {0x3229, 452, 2},
  {0x322a, 452, 2},
  {0x322b, 452, 2},
  {0x322c, 452, 2},
  {0x322d, 452, 2},
  {0x322e, 452, 2},
  {0x322f, 452, 2},
  {0x3230, 452, 2},
  {0x3231, 452, 2},
  {0x3232, 452, 2},
  {0x3233, 452, 2},
  {0x3234, 452, 2},
  {0x3235, 452, 2},
  {0x3236, 452, 2},
  {0x3237, 452, 2},
  {0x3238, 452, 2},
  {0x3239, 452, 2},
  {0x323a, 452, 2},
  {0x323b, 452, 2},
  {0x323c, 452, 2},
  {0x323d, 452, 2},
  {0x323e, 452, 2},
  {0x323f, 452, 2},
  {0x3240, 452, 2},
  {0x3241, 452, 2},
  {0x3242, 452, 2},
  {0x3243, 452, 2},
  {0x3250, 454, 3},
  {0x3251, 457, 2},
  {0x3252, 459, 2},
  {0x3253, 165, 2},
  {0x3254, 461, 2},
  {0x3255, 169, 2},
  {0x3256, 463, 2},
  {0x3257, 465, 2},
  {0x3258, 467, 2},
  {0x3259, 469, 2},
  {0x325a, 471, 2},
  {0x325b, 473, 2},
  {0x325c, 475, 2},
  {0x325d, 477, 2},
  {0x325e, 10, 2},
  {0x325f, 171, 2},
  {0x32b1, 479, 2},
  {0x32b2, 481, 2},
  {0x32b3, 181, 2},
  {0x32b4, 483, 2},
  {0x32b5, 485, 2},
  {0x32b6, 487, 2},
  {0x32b7, 489, 2},
  {0x32b8, 491, 2},
  {0x32b9, 493, 2},
  {0x32ba, 173, 2},
  {0x32bb, 495, 2},
  {0x32bc, 497, 2},
  {0x32bd, 499, 2},
  {0x32be, 501, 2},
  {0x32bf, 503, 2},
  {0x32c0, 4, 1},
  {0x32c1, 2, 1},
  {0x32c2, 3, 1},
  {0x32c3, 119, 1},
  {0x32c4, 120, 1},
  {0x32c5, 121, 1},
  {0x32c6, 122, 1},
  {0x32c7, 123, 1},
  {0x32c8, 124, 1},
  {0x32c9, 237, 2},
  {0x32ca, 239, 2},
  {0x32cb, 8, 2},
  {0x32cc, 505, 2},
  {0x32cd, 507, 3},
  {0x32ce, 510, 2},
  {0x32cf, 512, 3},
  {0x3358, 118, 1},
  {0x3359, 4, 1},
  {0x335a, 2, 1},
  {0x335b, 3, 1},
  {0x335c, 119, 1},
  {0x335d, 120, 1},
  {0x335e, 121, 1},
  {0x335f, 122, 1},
  {0x3360, 123, 1},
  {0x3361, 124, 1},
  {0x3362, 237, 2},
  {0x3363, 239, 2},
  {0x3364, 8, 2},
  {0x3365, 163, 2},
  {0x3366, 6, 2},
  {0x3367, 167, 2},
  {0x3368, 175, 2},
  {0x3369, 156, 2},
  {0x336a, 179, 2},
  {0x336b, 158, 2},
  {0x336c, 241, 2},
  {0x336d, 457, 2},
  {0x336e, 459, 2},
  {0x336f, 165, 2},
  {0x3370, 461, 2},
  {0x3371, 515, 3},
  {0x3372, 518, 2},
  {0x3373, 520, 2},
  {0x3374, 522, 3},
  {0x3375, 525, 2},
  {0x3376, 527, 2},
  {0x3377, 529, 2},
  {0x3378, 531, 3},
  {0x3379, 534, 3},
  {0x337a, 537, 2},
  {0x3380, 539, 2},
  {0x3381, 541, 2},
  {0x3382, 12, 1},
  {0x3383, 543, 2},
  {0x3384, 545, 2},
  {0x3385, 547, 2},
  {0x3386, 549, 2},
  {0x3387, 551, 2},
  {0x3388, 553, 3},
  {0x3389, 556, 4},
  {0x338a, 560, 2},
  {0x338b, 562, 2},
  {0x338c, 98, 1},
  {0x338d, 39, 1},
  {0x338e, 564, 2},
  {0x338f, 566, 2},
  {0x3390, 568, 2},
  {0x3391, 570, 3},
  {0x3392, 573, 3},
  {0x3393, 576, 3},
  {0x3394, 579, 3},
  {0x3395, 51, 1},
  {0x3396, 582, 2},
  {0x3397, 584, 2},
  {0x3398, 586, 2},
  {0x3399, 588, 2},
  {0x339a, 590, 2},
  {0x339b, 94, 1},
  {0x339c, 592, 2},
  {0x339d, 594, 2},
  {0x339e, 596, 2},
  {0x339f, 598, 3},
  {0x33a0, 601, 3},
  {0x33a1, 604, 2},
  {0x33a2, 606, 3},
  {0x33a3, 609, 3},
  {0x33a4, 612, 3},
  {0x33a5, 615, 2},
  {0x33a6, 617, 3},
  {0x33a7, 620, 2},
  {0x33a8, 622, 3},
  {0x33a9, 625, 2},
  {0x33aa, 627, 3},
  {0x33ab, 630, 3},
  {0x33ac, 633, 3},
  {0x33ad, 636, 3},
  {0x33ae, 639, 4},
  {0x33af, 643, 5},
  {0x33b0, 648, 2},
  {0x33b1, 650, 2},
  {0x33b2, 63, 1},
  {0x33b3, 620, 2},
  {0x33b4, 652, 2},
  {0x33b5, 654, 2},
  {0x33b6, 99, 1},
  {0x33b7, 656, 2},
  {0x33b8, 658, 2},
  {0x33b9, 660, 2},
  {0x33ba, 662, 2},
  {0x33bb, 664, 2},
  {0x33bc, 66, 1},
  {0x33bd, 666, 2},
  {0x33be, 668, 2},
  {0x33bf, 670, 2},
  {0x33c0, 49, 1},
  {0x33c1, 92, 1},
  {0x33c2, 672, 4},
  {0x33c3, 676, 2},
  {0x33c4, 678, 2},
  {0x33c5, 680, 2},
  {0x33c6, 682, 3},
  {0x33c7, 685, 3},
  {0x33c8, 688, 2},
  {0x33c9, 690, 2},
  {0x33ca, 692, 2},
  {0x33cb, 694, 2},
  {0x33cc, 696, 2},
  {0x33cd, 698, 2},
  {0x33ce, 700, 2},
  {0x33cf, 702, 2},
  {0x33d0, 704, 2},
  {0x33d1, 706, 2},
  {0x33d2, 708, 3},
  {0x33d3, 711, 2},
  {0x33d4, 713, 2},
  {0x33d5, 715, 3},
  {0x33d6, 718, 3},
  {0x33d7, 721, 2},
  {0x33d8, 723, 4},
  {0x33d9, 727, 3},
  {0x33da, 730, 2},
  {0x33db, 732, 2},
  {0x33dc, 734, 2},
  {0x33dd, 736, 2},
  {0x33de, 738, 2},
  {0x33df, 740, 2},
  {0x33e0, 4, 1},
  {0x33e1, 2, 1},
  {0x33e2, 3, 1},
  {0x33e3, 119, 1},
  {0x33e4, 120, 1},
  {0x33e5, 121, 1},
  {0x33e6, 122, 1},
  {0x33e7, 123, 1},
  {0x33e8, 124, 1},
  {0x33e9, 237, 2},
  {0x33ea, 239, 2},
  {0x33eb, 8, 2},
  {0x33ec, 163, 2},
  {0x33ed, 6, 2},
  {0x33ee, 167, 2},
  {0x33ef, 175, 2},
  {0x33f0, 156, 2},
  {0x33f1, 179, 2},
  {0x33f2, 158, 2},
  {0x33f3, 241, 2},
  {0x33f4, 457, 2},
  {0x33f5, 459, 2},
  {0x33f6, 165, 2},
  {0x33f7, 461, 2},
  {0x33f8, 169, 2},
  {0x33f9, 463, 2},
  {0x33fa, 465, 2},
  {0x33fb, 467, 2},
  {0x33fc, 469, 2},
  {0x33fd, 471, 2},
  {0x33fe, 473, 2},
  {0x33ff, 742, 3},
  {0xa7f8, 40, 1},
  {0xa7f9, 58, 2},
  {0xfb00, 745, 2},
  {0xfb01, 747, 2},
  {0xfb02, 749, 2},
  {0xfb03, 751, 3},
  {0xfb04, 754, 3},
  {0xfb05, 757, 2},
  {0xfb06, 757, 2},
  {0xfb29, 125, 1},
  {0xfc5e, 0, 1},
  {0xfc5f, 0, 1},
  {0xfc60, 0, 1},
  {0xfc61, 0, 1},
  {0xfc62, 0, 1},
  {0xfc63, 0, 1},
  {0xfdfa, 759, 3},
  {0xfdfb, 0, 1},
  {0xfe10, 762, 1},
  {0xfe13, 763, 1},
  {0xfe14, 90, 1},
  {0xfe15, 764, 1},
  {0xfe16, 765, 1},
  {0xfe19, 107, 3},
  {0xfe30, 105, 2},
  {0xfe33, 766, 1},
  {0xfe34, 766, 1},
  {0xfe35, 127, 1},
  {0xfe36, 128, 1},
  {0xfe37, 767, 1},
  {0xfe38, 768, 1},
  {0xfe47, 769, 1},
  {0xfe48, 770, 1},
  {0xfe49, 0, 1},
  {0xfe4a, 0, 1},
  {0xfe4b, 0, 1},
  {0xfe4c, 0, 1},
  {0xfe4d, 766, 1},
  {0xfe4e, 766, 1},
  {0xfe4f, 766, 1},
  {0xfe50, 762, 1},
  {0xfe52, 104, 1},
  {0xfe54, 90, 1},
  {0xfe55, 763, 1},
  {0xfe56, 765, 1},
  {0xfe57, 764, 1},
  {0xfe59, 127, 1},
  {0xfe5a, 128, 1},
  {0xfe5b, 767, 1},
  {0xfe5c, 768, 1},
  {0xfe5f, 771, 1},
  {0xfe60, 772, 1},
  {0xfe61, 773, 1},
  {0xfe62, 125, 1},
  {0xfe63, 774, 1},
  {0xfe64, 235, 1},
  {0xfe65, 236, 1},
  {0xfe66, 126, 1},
  {0xfe68, 775, 1},
  {0xfe69, 776, 1},
  {0xfe6a, 777, 1},
  {0xfe6b, 778, 1},
  {0xfe70, 0, 1},
  {0xfe72, 0, 1},
  {0xfe74, 0, 1},
  {0xfe76, 0, 1},
  {0xfe78, 0, 1},
  {0xfe7a, 0, 1},
  {0xfe7c, 0, 1},
  {0xfe7e, 0, 1},
  {0xff01, 764, 1},
  {0xff02, 779, 1},
  {0xff03, 771, 1},
  {0xff04, 776, 1},
  {0xff05, 777, 1},
  {0xff06, 772, 1},
  {0xff07, 780, 1},
  {0xff08, 127, 1},
  {0xff09, 128, 1},
  {0xff0a, 773, 1},
  {0xff0b, 125, 1},
  {0xff0c, 762, 1},
  {0xff0d, 774, 1},
  {0xff0e, 104, 1},
  {0xff0f, 781, 1},
  {0xff10, 118, 1},
  {0xff11, 4, 1},
  {0xff12, 2, 1},
  {0xff13, 3, 1},
  {0xff14, 119, 1},
  {0xff15, 120, 1},
  {0xff16, 121, 1},
  {0xff17, 122, 1},
  {0xff18, 123, 1},
  {0xff19, 124, 1},
  {0xff1a, 763, 1},
  {0xff1b, 90, 1},
  {0xff1c, 235, 1},
  {0xff1d, 126, 1},
  {0xff1e, 236, 1},
  {0xff1f, 765, 1},
  {0xff20, 778, 1},
  {0xff21, 12, 1},
  {0xff22, 91, 1},
  {0xff23, 15, 1},
  {0xff24, 18, 1},
  {0xff25, 16, 1},
  {0xff26, 98, 1},
  {0xff27, 38, 1},
  {0xff28, 40, 1},
  {0xff29, 17, 1},
  {0xff2a, 46, 1},
  {0xff2b, 48, 1},
  {0xff2c, 50, 1},
  {0xff2d, 92, 1},
  {0xff2e, 19, 1},
  {0xff2f, 20, 1},
  {0xff30, 93, 1},
  {0xff31, 145, 1},
  {0xff32, 60, 1},
  {0xff33, 62, 1},
  {0xff34, 64, 1},
  {0xff35, 21, 1},
  {0xff36, 99, 1},
  {0xff37, 66, 1},
  {0xff38, 100, 1},
  {0xff39, 22, 1},
  {0xff3a, 68, 1},
  {0xff3b, 769, 1},
  {0xff3c, 775, 1},
  {0xff3d, 770, 1},
  {0xff3e, 782, 1},
  {0xff3f, 766, 1},
  {0xff40, 103, 1},
  {0xff41, 1, 1},
  {0xff42, 70, 1},
  {0xff43, 29, 1},
  {0xff44, 32, 1},
  {0xff45, 30, 1},
  {0xff46, 97, 1},
  {0xff47, 39, 1},
  {0xff48, 41, 1},
  {0xff49, 31, 1},
  {0xff4a, 47, 1},
  {0xff4b, 49, 1},
  {0xff4c, 51, 1},
  {0xff4d, 94, 1},
  {0xff4e, 33, 1},
  {0xff4f, 5, 1},
  {0xff50, 95, 1},
  {0xff51, 443, 1},
  {0xff52, 61, 1},
  {0xff53, 63, 1},
  {0xff54, 65, 1},
  {0xff55, 34, 1},
  {0xff56, 96, 1},
  {0xff57, 67, 1},
  {0xff58, 89, 1},
  {0xff59, 35, 1},
  {0xff5a, 69, 1},
  {0xff5b, 767, 1},
  {0xff5c, 783, 1},
  {0xff5d, 768, 1},
  {0xff5e, 784, 1},
  {0xffe3, 0, 1},
  {0x1d400, 12, 1},
  {0x1d401, 91, 1},
  {0x1d402, 15, 1},
  {0x1d403, 18, 1},
  {0x1d404, 16, 1},
  {0x1d405, 98, 1},
  {0x1d406, 38, 1},
  {0x1d407, 40, 1},
  {0x1d408, 17, 1},
  {0x1d409, 46, 1},
  {0x1d40a, 48, 1},
  {0x1d40b, 50, 1},
  {0x1d40c, 92, 1},
  {0x1d40d, 19, 1},
  {0x1d40e, 20, 1},
  {0x1d40f, 93, 1},
  {0x1d410, 145, 1},
  {0x1d411, 60, 1},
  {0x1d412, 62, 1},
  {0x1d413, 64, 1},
  {0x1d414, 21, 1},
  {0x1d415, 99, 1},
  {0x1d416, 66, 1},
  {0x1d417, 100, 1},
  {0x1d418, 22, 1},
  {0x1d419, 68, 1},
  {0x1d41a, 1, 1},
  {0x1d41b, 70, 1},
  {0x1d41c, 29, 1},
  {0x1d41d, 32, 1},
  {0x1d41e, 30, 1},
  {0x1d41f, 97, 1},
  {0x1d420, 39, 1},
  {0x1d421, 41, 1},
  {0x1d422, 31, 1},
  {0x1d423, 47, 1},
  {0x1d424, 49, 1},
  {0x1d425, 51, 1},
  {0x1d426, 94, 1},
  {0x1d427, 33, 1},
  {0x1d428, 5, 1},
  {0x1d429, 95, 1},
  {0x1d42a, 443, 1},
  {0x1d42b, 61, 1},
  {0x1d42c, 63, 1},
  {0x1d42d, 65, 1},
  {0x1d42e, 34, 1},
  {0x1d42f, 96, 1},
  {0x1d430, 67, 1},
  {0x1d431, 89, 1},
  {0x1d432, 35, 1},
  {0x1d433, 69, 1},
  {0x1d434, 12, 1},
  {0x1d435, 91, 1},
  {0x1d436, 15, 1},
  {0x1d437, 18, 1},
  {0x1d438, 16, 1},
  {0x1d439, 98, 1},
  {0x1d43a, 38, 1},
  {0x1d43b, 40, 1},
  {0x1d43c, 17, 1},
  {0x1d43d, 46, 1},
  {0x1d43e, 48, 1},
  {0x1d43f, 50, 1},
  {0x1d440, 92, 1},
  {0x1d441, 19, 1},
  {0x1d442, 20, 1},
  {0x1d443, 93, 1},
  {0x1d444, 145, 1},
  {0x1d445, 60, 1},
  {0x1d446, 62, 1},
  {0x1d447, 64, 1},
  {0x1d448, 21, 1},
  {0x1d449, 99, 1},
  {0x1d44a, 66, 1},
  {0x1d44b, 100, 1},
  {0x1d44c, 22, 1},
  {0x1d44d, 68, 1},
  {0x1d44e, 1, 1},
  {0x1d44f, 70, 1},
  {0x1d450, 29, 1},
  {0x1d451, 32, 1},
  {0x1d452, 30, 1},
  {0x1d453, 97, 1},
  {0x1d454, 39, 1},
  {0x1d456, 31, 1},
  {0x1d457, 47, 1},
  {0x1d458, 49, 1},
  {0x1d459, 51, 1},
  {0x1d45a, 94, 1},
  {0x1d45b, 33, 1},
  {0x1d45c, 5, 1},
  {0x1d45d, 95, 1},
  {0x1d45e, 443, 1},
  {0x1d45f, 61, 1},
  {0x1d460, 63, 1},
  {0x1d461, 65, 1},
  {0x1d462, 34, 1},
  {0x1d463, 96, 1},
  {0x1d464, 67, 1},
  {0x1d465, 89, 1},
  {0x1d466, 35, 1},
  {0x1d467, 69, 1},
  {0x1d468, 12, 1},
  {0x1d469, 91, 1},
  {0x1d46a, 15, 1},
  {0x1d46b, 18, 1},
  {0x1d46c, 16, 1},
  {0x1d46d, 98, 1},
  {0x1d46e, 38, 1},
  {0x1d46f, 40, 1},
  {0x1d470, 17, 1},
  {0x1d471, 46, 1},
  {0x1d472, 48, 1},
  {0x1d473, 50, 1},
  {0x1d474, 92, 1},
  {0x1d475, 19, 1},
  {0x1d476, 20, 1},
  {0x1d477, 93, 1},
  {0x1d478, 145, 1},
  {0x1d479, 60, 1},
  {0x1d47a, 62, 1},
  {0x1d47b, 64, 1},
  {0x1d47c, 21, 1},
  {0x1d47d, 99, 1},
  {0x1d47e, 66, 1},
  {0x1d47f, 100, 1},
  {0x1d480, 22, 1},
  {0x1d481, 68, 1},
  {0x1d482, 1, 1},
  {0x1d483, 70, 1},
  {0x1d484, 29, 1},
  {0x1d485, 32, 1},
  {0x1d486, 30, 1},
  {0x1d487, 97, 1},
  {0x1d488, 39, 1},
  {0x1d489, 41, 1},
  {0x1d48a, 31, 1},
  {0x1d48b, 47, 1},
  {0x1d48c, 49, 1},
  {0x1d48d, 51, 1},
  {0x1d48e, 94, 1},
  {0x1d48f, 33, 1},
  {0x1d490, 5, 1},
  {0x1d491, 95, 1},
  {0x1d492, 443, 1},
  {0x1d493, 61, 1},
  {0x1d494, 63, 1},
  {0x1d495, 65, 1},
  {0x1d496, 34, 1},
  {0x1d497, 96, 1},
  {0x1d498, 67, 1},
  {0x1d499, 89, 1},
  {0x1d49a, 35, 1},
  {0x1d49b, 69, 1},
  {0x1d49c, 12, 1},
  {0x1d49e, 15, 1},
  {0x1d49f, 18, 1},
  {0x1d4a2, 38, 1},
  {0x1d4a5, 46, 1},
  {0x1d4a6, 48, 1},
  {0x1d4a9, 19, 1},
  {0x1d4aa, 20, 1},
  {0x1d4ab, 93, 1},
  {0x1d4ac, 145, 1},
  {0x1d4ae, 62, 1},
  {0x1d4af, 64, 1},
  {0x1d4b0, 21, 1},
  {0x1d4b1, 99, 1},
  {0x1d4b2, 66, 1},
  {0x1d4b3, 100, 1},
  {0x1d4b4, 22, 1},
  {0x1d4b5, 68, 1},
  {0x1d4b6, 1, 1},
  {0x1d4b7, 70, 1},
  {0x1d4b8, 29, 1},
  {0x1d4b9, 32, 1},
  {0x1d4bb, 97, 1},
  {0x1d4bd, 41, 1},
  {0x1d4be, 31, 1},
  {0x1d4bf, 47, 1},
  {0x1d4c0, 49, 1},
  {0x1d4c1, 51, 1},
  {0x1d4c2, 94, 1},
  {0x1d4c3, 33, 1},
  {0x1d4c5, 95, 1},
  {0x1d4c6, 443, 1},
  {0x1d4c7, 61, 1},
  {0x1d4c8, 63, 1},
  {0x1d4c9, 65, 1},
  {0x1d4ca, 34, 1},
  {0x1d4cb, 96, 1},
  {0x1d4cc, 67, 1},
  {0x1d4cd, 89, 1},
  {0x1d4ce, 35, 1},
  {0x1d4cf, 69, 1},
  {0x1d4d0, 12, 1},
  {0x1d4d1, 91, 1},
  {0x1d4d2, 15, 1},
  {0x1d4d3, 18, 1},
  {0x1d4d4, 16, 1},
  {0x1d4d5, 98, 1},
  {0x1d4d6, 38, 1},
  {0x1d4d7, 40, 1},
  {0x1d4d8, 17, 1},
  {0x1d4d9, 46, 1},
  {0x1d4da, 48, 1},
  {0x1d4db, 50, 1},
  {0x1d4dc, 92, 1},
  {0x1d4dd, 19, 1},
  {0x1d4de, 20, 1},
  {0x1d4df, 93, 1},
  {0x1d4e0, 145, 1},
  {0x1d4e1, 60, 1},
  {0x1d4e2, 62, 1},
  {0x1d4e3, 64, 1},
  {0x1d4e4, 21, 1},
  {0x1d4e5, 99, 1},
  {0x1d4e6, 66, 1},
  {0x1d4e7, 100, 1},
  {0x1d4e8, 22, 1},
  {0x1d4e9, 68, 1},
  {0x1d4ea, 1, 1},
  {0x1d4eb, 70, 1},
  {0x1d4ec, 29, 1},
  {0x1d4ed, 32, 1},
  {0x1d4ee, 30, 1},
  {0x1d4ef, 97, 1},
  {0x1d4f0, 39, 1},
  {0x1d4f1, 41, 1},
  {0x1d4f2, 31, 1},
  {0x1d4f3, 47, 1},
  {0x1d4f4, 49, 1},
  {0x1d4f5, 51, 1},
  {0x1d4f6, 94, 1},
  {0x1d4f7, 33, 1},
  {0x1d4f8, 5, 1},
  {0x1d4f9, 95, 1},
  {0x1d4fa, 443, 1},
  {0x1d4fb, 61, 1},
  {0x1d4fc, 63, 1},
  {0x1d4fd, 65, 1},
  {0x1d4fe, 34, 1},
  {0x1d4ff, 96, 1},
  {0x1d500, 67, 1},
  {0x1d501, 89, 1},
  {0x1d502, 35, 1},
  {0x1d503, 69, 1},
  {0x1d504, 12, 1},
  {0x1d505, 91, 1},
  {0x1d507, 18, 1},
  {0x1d508, 16, 1},
  {0x1d509, 98, 1},
  {0x1d50a, 38, 1},
  {0x1d50d, 46, 1},
  {0x1d50e, 48, 1},
  {0x1d50f, 50, 1},
  {0x1d510, 92, 1},
  {0x1d511, 19, 1},
  {0x1d512, 20, 1},
  {0x1d513, 93, 1},
  {0x1d514, 145, 1},
  {0x1d516, 62, 1},
  {0x1d517, 64, 1},
  {0x1d518, 21, 1},
  {0x1d519, 99, 1},
  {0x1d51a, 66, 1},
  {0x1d51b, 100, 1},
  {0x1d51c, 22, 1},
  {0x1d51e, 1, 1},
  {0x1d51f, 70, 1},
  {0x1d520, 29, 1},
  {0x1d521, 32, 1},
  {0x1d522, 30, 1},
  {0x1d523, 97, 1},
  {0x1d524, 39, 1},
  {0x1d525, 41, 1},
  {0x1d526, 31, 1},
  {0x1d527, 47, 1},
  {0x1d528, 49, 1},
  {0x1d529, 51, 1},
  {0x1d52a, 94, 1},
  {0x1d52b, 33, 1},
  {0x1d52c, 5, 1},
  {0x1d52d, 95, 1},
  {0x1d52e, 443, 1},
  {0x1d52f, 61, 1},
  {0x1d530, 63, 1},
  {0x1d531, 65, 1},
  {0x1d532, 34, 1},
  {0x1d533, 96, 1},
  {0x1d534, 67, 1},
  {0x1d535, 89, 1},
  {0x1d536, 35, 1},
  {0x1d537, 69, 1},
  {0x1d538, 12, 1},
  {0x1d539, 91, 1},
  {0x1d53b, 18, 1},
  {0x1d53c, 16, 1},
  {0x1d53d, 98, 1},
  {0x1d53e, 38, 1},
  {0x1d540, 17, 1},
  {0x1d541, 46, 1},
  {0x1d542, 48, 1},
  {0x1d543, 50, 1},
  {0x1d544, 92, 1},
  {0x1d546, 20, 1},
  {0x1d54a, 62, 1},
  {0x1d54b, 64, 1},
  {0x1d54c, 21, 1},
  {0x1d54d, 99, 1},
  {0x1d54e, 66, 1},
  {0x1d54f, 100, 1},
  {0x1d550, 22, 1},
  {0x1d552, 1, 1},
  {0x1d553, 70, 1},
  {0x1d554, 29, 1},
  {0x1d555, 32, 1},
  {0x1d556, 30, 1},
  {0x1d557, 97, 1},
  {0x1d558, 39, 1},
  {0x1d559, 41, 1},
  {0x1d55a, 31, 1},
  {0x1d55b, 47, 1},
  {0x1d55c, 49, 1},
  {0x1d55d, 51, 1},
  {0x1d55e, 94, 1},
  {0x1d55f, 33, 1},
  {0x1d560, 5, 1},
  {0x1d561, 95, 1},
  {0x1d562, 443, 1},
  {0x1d563, 61, 1},
  {0x1d564, 63, 1},
  {0x1d565, 65, 1},
  {0x1d566, 34, 1},
  {0x1d567, 96, 1},
  {0x1d568, 67, 1},
  {0x1d569, 89, 1},
  {0x1d56a, 35, 1},
  {0x1d56b, 69, 1},
  {0x1d56c, 12, 1},
  {0x1d56d, 91, 1},
  {0x1d56e, 15, 1},
  {0x1d56f, 18, 1},
  {0x1d570, 16, 1},
  {0x1d571, 98, 1},
  {0x1d572, 38, 1},
  {0x1d573, 40, 1},
  {0x1d574, 17, 1},
  {0x1d575, 46, 1},
  {0x1d576, 48, 1},
  {0x1d577, 50, 1},
  {0x1d578, 92, 1},
  {0x1d579, 19, 1},
  {0x1d57a, 20, 1},
  {0x1d57b, 93, 1},
  {0x1d57c, 145, 1},
  {0x1d57d, 60, 1},
  {0x1d57e, 62, 1},
  {0x1d57f, 64, 1},
  {0x1d580, 21, 1},
  {0x1d581, 99, 1},
  {0x1d582, 66, 1},
  {0x1d583, 100, 1},
  {0x1d584, 22, 1},
  {0x1d585, 68, 1},
  {0x1d586, 1, 1},
  {0x1d587, 70, 1},
  {0x1d588, 29, 1},
  {0x1d589, 32, 1},
  {0x1d58a, 30, 1},
  {0x1d58b, 97, 1},
  {0x1d58c, 39, 1},
  {0x1d58d, 41, 1},
  {0x1d58e, 31, 1},
  {0x1d58f, 47, 1},
  {0x1d590, 49, 1},
  {0x1d591, 51, 1},
  {0x1d592, 94, 1},
  {0x1d593, 33, 1},
  {0x1d594, 5, 1},
  {0x1d595, 95, 1},
  {0x1d596, 443, 1},
  {0x1d597, 61, 1},
  {0x1d598, 63, 1},
  {0x1d599, 65, 1},
  {0x1d59a, 34, 1},
  {0x1d59b, 96, 1},
  {0x1d59c, 67, 1},
  {0x1d59d, 89, 1},
  {0x1d59e, 35, 1},
  {0x1d59f, 69, 1},
  {0x1d5a0, 12, 1},
  {0x1d5a1, 91, 1},
  {0x1d5a2, 15, 1},
  {0x1d5a3, 18, 1},
  {0x1d5a4, 16, 1},
  {0x1d5a5, 98, 1},
  {0x1d5a6, 38, 1},
  {0x1d5a7, 40, 1},
  {0x1d5a8, 17, 1},
  {0x1d5a9, 46, 1},
  {0x1d5aa, 48, 1},
  {0x1d5ab, 50, 1},
  {0x1d5ac, 92, 1},
  {0x1d5ad, 19, 1},
  {0x1d5ae, 20, 1},
  {0x1d5af, 93, 1},
  {0x1d5b0, 145, 1},
  {0x1d5b1, 60, 1},
  {0x1d5b2, 62, 1},
  {0x1d5b3, 64, 1},
  {0x1d5b4, 21, 1},
  {0x1d5b5, 99, 1},
  {0x1d5b6, 66, 1},
  {0x1d5b7, 100, 1},
  {0x1d5b8, 22, 1},
  {0x1d5b9, 68, 1},
  {0x1d5ba, 1, 1},
  {0x1d5bb, 70, 1},
  {0x1d5bc, 29, 1},
  {0x1d5bd, 32, 1},
  {0x1d5be, 30, 1},
  {0x1d5bf, 97, 1},
  {0x1d5c0, 39, 1},
  {0x1d5c1, 41, 1},
  {0x1d5c2, 31, 1},
  {0x1d5c3, 47, 1},
  {0x1d5c4, 49, 1},
  {0x1d5c5, 51, 1},
  {0x1d5c6, 94, 1},
  {0x1d5c7, 33, 1},
  {0x1d5c8, 5, 1},
  {0x1d5c9, 95, 1},
  {0x1d5ca, 443, 1},
  {0x1d5cb, 61, 1},
  {0x1d5cc, 63, 1},
  {0x1d5cd, 65, 1},
  {0x1d5ce, 34, 1},
  {0x1d5cf, 96, 1},
  {0x1d5d0, 67, 1},
  {0x1d5d1, 89, 1},
  {0x1d5d2, 35, 1},
  {0x1d5d3, 69, 1},
  {0x1d5d4, 12, 1},
  {0x1d5d5, 91, 1},
  {0x1d5d6, 15, 1},
  {0x1d5d7, 18, 1},
  {0x1d5d8, 16, 1},
  {0x1d5d9, 98, 1},
  {0x1d5da, 38, 1},
  {0x1d5db, 40, 1},
  {0x1d5dc, 17, 1},
  {0x1d5dd, 46, 1},
  {0x1d5de, 48, 1},
  {0x1d5df, 50, 1},
  {0x1d5e0, 92, 1},
  {0x1d5e1, 19, 1},
  {0x1d5e2, 20, 1},
  {0x1d5e3, 93, 1},
  {0x1d5e4, 145, 1},
  {0x1d5e5, 60, 1},
  {0x1d5e6, 62, 1},
  {0x1d5e7, 64, 1},
  {0x1d5e8, 21, 1},
  {0x1d5e9, 99, 1},
  {0x1d5ea, 66, 1},
  {0x1d5eb, 100, 1},
  {0x1d5ec, 22, 1},
  {0x1d5ed, 68, 1},
  {0x1d5ee, 1, 1},
  {0x1d5ef, 70, 1},
  {0x1d5f0, 29, 1},
  {0x1d5f1, 32, 1},
  {0x1d5f2, 30, 1},
  {0x1d5f3, 97, 1},
  {0x1d5f4, 39, 1},
  {0x1d5f5, 41, 1},
  {0x1d5f6, 31, 1},
  {0x1d5f7, 47, 1},
  {0x1d5f8, 49, 1},
  {0x1d5f9, 51, 1},
  {0x1d5fa, 94, 1},
  {0x1d5fb, 33, 1},
  {0x1d5fc, 5, 1},
  {0x1d5fd, 95, 1},
  {0x1d5fe, 443, 1},
  {0x1d5ff, 61, 1},
  {0x1d600, 63, 1},
  {0x1d601, 65, 1},
  {0x1d602, 34, 1},
  {0x1d603, 96, 1},
  {0x1d604, 67, 1},
  {0x1d605, 89, 1},
  {0x1d606, 35, 1},
  {0x1d607, 69, 1},
  {0x1d608, 12, 1},
  {0x1d609, 91, 1},
  {0x1d60a, 15, 1},
  {0x1d60b, 18, 1},
  {0x1d60c, 16, 1},
  {0x1d60d, 98, 1},
  {0x1d60e, 38, 1},
  {0x1d60f, 40, 1},
  {0x1d610, 17, 1},
  {0x1d611, 46, 1},
  {0x1d612, 48, 1},
  {0x1d613, 50, 1},
  {0x1d614, 92, 1},
  {0x1d615, 19, 1},
  {0x1d616, 20, 1},
  {0x1d617, 93, 1},
  {0x1d618, 145, 1},
  {0x1d619, 60, 1},
  {0x1d61a, 62, 1},
  {0x1d61b, 64, 1},
  {0x1d61c, 21, 1},
  {0x1d61d, 99, 1},
  {0x1d61e, 66, 1},
  {0x1d61f, 100, 1},
  {0x1d620, 22, 1},
  {0x1d621, 68, 1},
  {0x1d622, 1, 1},
  {0x1d623, 70, 1},
  {0x1d624, 29, 1},
  {0x1d625, 32, 1},
  {0x1d626, 30, 1},
  {0x1d627, 97, 1},
  {0x1d628, 39, 1},
  {0x1d629, 41, 1},
  {0x1d62a, 31, 1},
  {0x1d62b, 47, 1},
  {0x1d62c, 49, 1},
  {0x1d62d, 51, 1},
  {0x1d62e, 94, 1},
  {0x1d62f, 33, 1},
  {0x1d630, 5, 1},
  {0x1d631, 95, 1},
  {0x1d632, 443, 1},
  {0x1d633, 61, 1},
  {0x1d634, 63, 1},
  {0x1d635, 65, 1},
  {0x1d636, 34, 1},
  {0x1d637, 96, 1},
  {0x1d638, 67, 1},
  {0x1d639, 89, 1},
  {0x1d63a, 35, 1},
  {0x1d63b, 69, 1},
  {0x1d63c, 12, 1},
  {0x1d63d, 91, 1},
  {0x1d63e, 15, 1},
  {0x1d63f, 18, 1},
  {0x1d640, 16, 1},
  {0x1d641, 98, 1},
  {0x1d642, 38, 1},
  {0x1d643, 40, 1},
  {0x1d644, 17, 1},
  {0x1d645, 46, 1},
  {0x1d646, 48, 1},
  {0x1d647, 50, 1},
  {0x1d648, 92, 1},
  {0x1d649, 19, 1},
  {0x1d64a, 20, 1},
  {0x1d64b, 93, 1},
  {0x1d64c, 145, 1},
  {0x1d64d, 60, 1},
  {0x1d64e, 62, 1},
  {0x1d64f, 64, 1},
  {0x1d650, 21, 1},
  {0x1d651, 99, 1},
  {0x1d652, 66, 1},
  {0x1d653, 100, 1},
  {0x1d654, 22, 1},
  {0x1d655, 68, 1},
  {0x1d656, 1, 1},
  {0x1d657, 70, 1},
  {0x1d658, 29, 1},
  {0x1d659, 32, 1},
  {0x1d65a, 30, 1},
  {0x1d65b, 97, 1},
  {0x1d65c, 39, 1},
  {0x1d65d, 41, 1},
  {0x1d65e, 31, 1},
  {0x1d65f, 47, 1},
  {0x1d660, 49, 1},
  {0x1d661, 51, 1},
  {0x1d662, 94, 1},
  {0x1d663, 33, 1},
  {0x1d664, 5, 1},
  {0x1d665, 95, 1},
  {0x1d666, 443, 1},
  {0x1d667, 61, 1},
  {0x1d668, 63, 1},
  {0x1d669, 65, 1},
  {0x1d66a, 34, 1},
  {0x1d66b, 96, 1},
  {0x1d66c, 67, 1},
  {0x1d66d, 89, 1},
  {0x1d66e, 35, 1},
  {0x1d66f, 69, 1},
  {0x1d670, 12, 1},
  {0x1d671, 91, 1},
  {0x1d672, 15, 1},
  {0x1d673, 18, 1},
  {0x1d674, 16, 1},
  {0x1d675, 98, 1},
  {0x1d676, 38, 1},
  {0x1d677, 40, 1},
  {0x1d678, 17, 1},
  {0x1d679, 46, 1},
  {0x1d67a, 48, 1},
  {0x1d67b, 50, 1},
  {0x1d67c, 92, 1},
  {0x1d67d, 19, 1},
  {0x1d67e, 20, 1},
  {0x1d67f, 93, 1},
  {0x1d680, 145, 1},
  {0x1d681, 60, 1},
  {0x1d682, 62, 1},
  {0x1d683, 64, 1},
  {0x1d684, 21, 1},
  {0x1d685, 99, 1},
  {0x1d686, 66, 1},
  {0x1d687, 100, 1},
  {0x1d688, 22, 1},
  {0x1d689, 68, 1},
  {0x1d68a, 1, 1},
  {0x1d68b, 70, 1},
  {0x1d68c, 29, 1},
  {0x1d68d, 32, 1},
  {0x1d68e, 30, 1},
  {0x1d68f, 97, 1},
  {0x1d690, 39, 1},
  {0x1d691, 41, 1},
  {0x1d692, 31, 1},
  {0x1d693, 47, 1},
  {0x1d694, 49, 1},
  {0x1d695, 51, 1},
  {0x1d696, 94, 1},
  {0x1d697, 33, 1},
  {0x1d698, 5, 1},
  {0x1d699, 95, 1},
  {0x1d69a, 443, 1},
  {0x1d69b, 61, 1},
  {0x1d69c, 63, 1},
  {0x1d69d, 65, 1},
  {0x1d69e, 34, 1},
  {0x1d69f, 96, 1},
  {0x1d6a0, 67, 1},
  {0x1d6a1, 89, 1},
  {0x1d6a2, 35, 1},
  {0x1d6a3, 69, 1},
  {0x1d6a4, 31, 1},
  {0x1d7ce, 118, 1},
  {0x1d7cf, 4, 1},
  {0x1d7d0, 2, 1},
  {0x1d7d1, 3, 1},
  {0x1d7d2, 119, 1},
  {0x1d7d3, 120, 1},
  {0x1d7d4, 121, 1},
  {0x1d7d5, 122, 1},
  {0x1d7d6, 123, 1},
  {0x1d7d7, 124, 1},
  {0x1d7d8, 118, 1},
  {0x1d7d9, 4, 1},
  {0x1d7da, 2, 1},
  {0x1d7db, 3, 1},
  {0x1d7dc, 119, 1},
  {0x1d7dd, 120, 1},
  {0x1d7de, 121, 1},
  {0x1d7df, 122, 1},
  {0x1d7e0, 123, 1},
  {0x1d7e1, 124, 1},
  {0x1d7e2, 118, 1},
  {0x1d7e3, 4, 1},
  {0x1d7e4, 2, 1},
  {0x1d7e5, 3, 1},
  {0x1d7e6, 119, 1},
  {0x1d7e7, 120, 1},
  {0x1d7e8, 121, 1},
  {0x1d7e9, 122, 1},
  {0x1d7ea, 123, 1},
  {0x1d7eb, 124, 1},
  {0x1d7ec, 118, 1},
  {0x1d7ed, 4, 1},
  {0x1d7ee, 2, 1},
  {0x1d7ef, 3, 1},
  {0x1d7f0, 119, 1},
  {0x1d7f1, 120, 1},
  {0x1d7f2, 121, 1},
  {0x1d7f3, 122, 1},
  {0x1d7f4, 123, 1},
  {0x1d7f5, 124, 1},
  {0x1d7f6, 118, 1},
  {0x1d7f7, 4, 1},
  {0x1d7f8, 2, 1},
  {0x1d7f9, 3, 1},
  {0x1d7fa, 119, 1},
  {0x1d7fb, 120, 1},
  {0x1d7fc, 121, 1},
  {0x1d7fd, 122, 1},
  {0x1d7fe, 123, 1},
  {0x1d7ff, 124, 1},
  {0x1f100, 785, 2},
  {0x1f101, 787, 2},
  {0x1f102, 789, 2},
  {0x1f103, 791, 2},
  {0x1f104, 793, 2},
  {0x1f105, 795, 2},
  {0x1f106, 797, 2},
  {0x1f107, 799, 2},
  {0x1f108, 801, 2},
  {0x1f109, 803, 2},
  {0x1f10a, 805, 2},
  {0x1f110, 807, 3},
  {0x1f111, 810, 3},
  {0x1f112, 813, 3},
  {0x1f113, 816, 3},
  {0x1f114, 819, 3},
  {0x1f115, 822, 3},
  {0x1f116, 825, 3},
  {0x1f117, 828, 3},
  {0x1f118, 831, 3},
  {0x1f119, 834, 3},
  {0x1f11a, 837, 3},
  {0x1f11b, 840, 3},
  {0x1f11c, 843, 3},
  {0x1f11d, 846, 3},
  {0x1f11e, 849, 3},
  {0x1f11f, 852, 3},
  {0x1f120, 855, 3},
  {0x1f121, 858, 3},
  {0x1f122, 861, 3},
  {0x1f123, 864, 3},
  {0x1f124, 867, 3},
  {0x1f125, 870, 3},
  {0x1f126, 873, 3},
  {0x1f127, 876, 3},
  {0x1f128, 879, 3},
  {0x1f129, 882, 3},
  {0x1f12a, 62, 1},
  {0x1f12b, 15, 1},
  {0x1f12c, 60, 1},
  {0x1f12d, 885, 2},
  {0x1f12e, 887, 2},
  {0x1f130, 12, 1},
  {0x1f131, 91, 1},
  {0x1f132, 15, 1},
  {0x1f133, 18, 1},
  {0x1f134, 16, 1},
  {0x1f135, 98, 1},
  {0x1f136, 38, 1},
  {0x1f137, 40, 1},
  {0x1f138, 17, 1},
  {0x1f139, 46, 1},
  {0x1f13a, 48, 1},
  {0x1f13b, 50, 1},
  {0x1f13c, 92, 1},
  {0x1f13d, 19, 1},
  {0x1f13e, 20, 1},
  {0x1f13f, 93, 1},
  {0x1f140, 145, 1},
  {0x1f141, 60, 1},
  {0x1f142, 62, 1},
  {0x1f143, 64, 1},
  {0x1f144, 21, 1},
  {0x1f145, 99, 1},
  {0x1f146, 66, 1},
  {0x1f147, 100, 1},
  {0x1f148, 22, 1},
  {0x1f149, 68, 1},
  {0x1f14a, 889, 2},
  {0x1f14b, 660, 2},
  {0x1f14c, 891, 2},
  {0x1f14d, 101, 2},
  {0x1f14e, 893, 3},
  {0x1f14f, 896, 2},
  {0x1f16a, 898, 2},
  {0x1f16b, 900, 2},
  {0x1f16c, 902, 2},
  {0x1f190, 904, 2},
  {0x1fbf0, 118, 1},
  {0x1fbf1, 4, 1},
  {0x1fbf2, 2, 1},
  {0x1fbf3, 3, 1},
  {0x1fbf4, 119, 1},
  {0x1fbf5, 120, 1},
  {0x1fbf6, 121, 1},
  {0x1fbf7, 122, 1},
  {0x1fbf8, 123, 1},
  {0x1fbf9, 124, 1},
};

}  // namespace lemcluster::detail
