/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <posat/hash.hh>
#include <posat/errors.hh>

#include <openssl/evp.h>

#include <memory>

namespace posat
{
    auto content_hash(const std::string & text) -> std::string
    {
        std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> context(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int length = 0;
        if (! context
                || 1 != EVP_DigestInit_ex(context.get(), EVP_sha256(), nullptr)
                || 1 != EVP_DigestUpdate(context.get(), text.data(), text.size())
                || 1 != EVP_DigestFinal_ex(context.get(), digest, &length))
            throw Error("sha256 digest failed");

        static const char hex[] = "0123456789abcdef";
        std::string result;
        for (unsigned int i = 0 ; i < length ; ++i) {
            result += hex[digest[i] >> 4];
            result += hex[digest[i] & 0xf];
        }
        return result;
    }
}
