/*
 * Copyright (c) 2026 OVC contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * The public header must stay consumable from plain C.
 */

#include <stdio.h>
#include <string.h>

#include "ovc.h"

int main(void) {
  if (strcmp(ovc_status_name(OVC_OK), "OK") != 0) return 1;
  if (ovc_version() == NULL) return 1;
  printf("ovc %s\n", ovc_version());
  return 0;
}
