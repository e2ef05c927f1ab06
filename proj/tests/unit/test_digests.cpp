#include <doctest.h>

#include <string>
#include <vector>

#include "cihash/bitvector.hpp"
#include "cihash/digests.hpp"

using namespace cihash;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& text)
{
    return {text.begin(), text.end()};
}

std::string hex_of(digest::Algorithm alg, const std::string& text)
{
    return BitVector::from_bytes(digest::compute(alg, bytes_of(text))).to_hex();
}

}  // namespace

TEST_CASE("md5 matches its published test vectors")
{
    CHECK(hex_of(digest::Algorithm::md5, "") == "D41D8CD98F00B204E9800998ECF8427E");
    CHECK(hex_of(digest::Algorithm::md5, "abc") == "900150983CD24FB0D6963F7D28E17F72");
    CHECK(hex_of(digest::Algorithm::md5, "message digest") ==
          "F96B697D7CB7938D525A2F31AAF161D0");
    // 56 bytes forces the two-block padding path
    CHECK(hex_of(digest::Algorithm::md5, std::string(56, 'a')) ==
          "3B0C8AC703F828B04C6C197006D17218");
    CHECK(hex_of(digest::Algorithm::md5, std::string(1000000, 'a')) ==
          "7707D6AE4E027C70EEA2A935C2296F21");
}

TEST_CASE("sha1 matches its published test vectors")
{
    CHECK(hex_of(digest::Algorithm::sha1, "") ==
          "DA39A3EE5E6B4B0D3255BFEF95601890AFD80709");
    CHECK(hex_of(digest::Algorithm::sha1, "abc") ==
          "A9993E364706816ABA3E25717850C26C9CD0D89D");
    CHECK(hex_of(digest::Algorithm::sha1,
                 "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
          "84983E441C3BD26EBAAE4AA1F95129E5E54670F1");
}

TEST_CASE("sha224 and sha256 match their published test vectors")
{
    CHECK(hex_of(digest::Algorithm::sha224, "") ==
          "D14A028C2A3A2BC9476102BB288234C415A2B01F828EA62AC5B3E42F");
    CHECK(hex_of(digest::Algorithm::sha224, "abc") ==
          "23097D223405D8228642A477BDA255B32AADBCE4BDA0B3F7E36C9DA7");
    CHECK(hex_of(digest::Algorithm::sha256, "") ==
          "E3B0C44298FC1C149AFBF4C8996FB92427AE41E4649B934CA495991B7852B855");
    CHECK(hex_of(digest::Algorithm::sha256, "abc") ==
          "BA7816BF8F01CFEA414140DE5DAE2223B00361A396177A9CB410FF61F20015AD");
    CHECK(hex_of(digest::Algorithm::sha256, std::string(1000000, 'a')) ==
          "CDC76E5C9914FB9281A1C7E284D73E67F1809A48A497200E046D39CCC7112CD0");
}

TEST_CASE("sha384 and sha512 match their published test vectors")
{
    CHECK(hex_of(digest::Algorithm::sha384, "") ==
          "38B060A751AC96384CD9327EB1B1E36A21FDB71114BE07434C0CC7BF63F6E1DA"
          "274EDEBFE76F65FBD51AD2F14898B95B");
    CHECK(hex_of(digest::Algorithm::sha384, "abc") ==
          "CB00753F45A35E8BB5A03D699AC65007272C32AB0EDED1631A8B605A43FF5BED"
          "8086072BA1E7CC2358BAECA134C825A7");
    CHECK(hex_of(digest::Algorithm::sha512, "") ==
          "CF83E1357EEFB8BDF1542850D66D8007D620E4050B5715DC83F4A921D36CE9CE"
          "47D0D13C5D85F2B0FF8318D2877EEC2F63B931BD47417A81A538327AF927DA3E");
    CHECK(hex_of(digest::Algorithm::sha512, "abc") ==
          "DDAF35A193617ABACC417349AE20413112E6FA4E89A97EA20A9EEEE64B55D39A"
          "2192992A274FC1A836BA3C23A3FEEBBD454D4423643CE80E2A9AC94FA54CA49F");
}

TEST_CASE("output sizes and names")
{
    CHECK(digest::output_bits(digest::Algorithm::md5) == 128);
    CHECK(digest::output_bits(digest::Algorithm::sha1) == 160);
    CHECK(digest::output_bits(digest::Algorithm::sha224) == 224);
    CHECK(digest::output_bits(digest::Algorithm::sha256) == 256);
    CHECK(digest::output_bits(digest::Algorithm::sha384) == 384);
    CHECK(digest::output_bits(digest::Algorithm::sha512) == 512);
    for (const auto alg : digest::all_algorithms) {
        CHECK(digest::parse(digest::name(alg)) == alg);
        CHECK(digest::compute(alg, {}).size() * 8 == digest::output_bits(alg));
    }
    CHECK_FALSE(digest::parse("sha3").has_value());
}
