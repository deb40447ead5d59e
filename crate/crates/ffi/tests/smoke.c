#include <stdio.h>
#include <string.h>
#include "structctl.h"

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond,   \
              sc_last_error());                                        \
      return 1;                                                        \
    }                                                                  \
  } while (0)

int main(int argc, char **argv) {
  if (argc != 2) return 2;
  ScSystem *sys = NULL;
  EXPECT(sc_system_load(argv[1], &sys) == SC_STATUS_OK);
  size_t n = 0, m = 0;
  EXPECT(sc_system_dims(sys, &n, &m) == SC_STATUS_OK);
  EXPECT(n == 5 && m == 2);

  ScVerdict v;
  EXPECT(sc_check(sys, SC_METHOD_PBH, &v) == SC_STATUS_OK);
  EXPECT(v == SC_VERDICT_CONTROLLABLE);

  ScCertificate *cert = NULL;
  EXPECT(sc_certificate_search(sys, NULL, &v, &cert) == SC_STATUS_OK);
  EXPECT(v == SC_VERDICT_CERTIFIED && cert != NULL);
  bool valid = false;
  EXPECT(sc_verify(sys, cert, &valid) == SC_STATUS_OK && valid);

  char *json = NULL;
  EXPECT(sc_certificate_to_json(cert, &json) == SC_STATUS_OK);
  EXPECT(strstr(json, "\"a2\"") != NULL);
  sc_string_free(json);
  sc_certificate_free(cert);

  ScSystem *bad = NULL;
  EXPECT(sc_system_from_json("{\"name\":", &bad) == SC_STATUS_PARSE);
  EXPECT(bad == NULL && strlen(sc_last_error()) > 0);

  sc_system_free(sys);
  printf("ok\n");
  return 0;
}
