#include "succulent/succulent.h"

#include <cstring>
#include <string>

#include "core/graph.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

suc_status fail(suc_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

}  // namespace

extern "C" {

int32_t suc_abi_version(void) { return 1; }

const char* suc_last_error(void) { return g_last_error.c_str(); }

suc_status suc_analyze(const char*, const char*, suc_result**) {
  return fail(SUC_ERR_INTERNAL, "not implemented");
}

suc_status suc_cactus(const char*, const char*, const char*, suc_result**) {
  return fail(SUC_ERR_INTERNAL, "not implemented");
}

suc_status suc_verify(const char*, const char*, suc_result**) {
  return fail(SUC_ERR_INTERNAL, "not implemented");
}

suc_status suc_generate(uint64_t, const char*, char**) {
  return fail(SUC_ERR_INTERNAL, "not implemented");
}

suc_status suc_result_json(const suc_result*, char**) {
  return fail(SUC_ERR_INTERNAL, "not implemented");
}

suc_status suc_result_dot(const suc_result*, int32_t, char**) {
  return fail(SUC_ERR_INTERNAL, "not implemented");
}

void suc_result_free(suc_result*) {}

void suc_string_free(char* s) { delete[] s; }

}  // extern "C"
