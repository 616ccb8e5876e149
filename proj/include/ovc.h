/*
 * Copyright (c) 2026 OVC contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API of the OVC constraint-validation library. The library keeps
 * engineering models and OCL constraints inside Asset Administration Shell
 * submodels on disk, validates the constraints and writes the results back
 * into the store.
 *
 * All functions returning ovc_status report OVC_OK on success; on failure a
 * human-readable message is available through ovc_last_error() until the
 * next call on the same store handle. Strings returned through out
 * parameters are heap-allocated and must be released with ovc_string_free().
 */

#ifndef OVC_H
#define OVC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ovc_status {
  OVC_OK = 0,
  OVC_E_IO = 1,               /* unreadable/unwritable store, corrupt document */
  OVC_E_NOT_FOUND = 2,        /* unknown id, element path or missing report */
  OVC_E_MALFORMED = 3,        /* unparseable input: XML, OCL, entity, argument */
  OVC_E_TYPE_MISMATCH = 4,    /* value conflicts with a declared type */
  OVC_E_CONFLICT = 5,         /* duplicate idShort */
  OVC_E_LOCKED = 6,           /* store is locked by another process */
  OVC_E_MISSING_ARTIFACT = 7, /* pipeline input file absent or empty */
  OVC_E_BIND = 8,             /* HTTP server could not bind */
  OVC_E_INTERNAL = 9
} ovc_status;

const char* ovc_status_name(ovc_status status);
const char* ovc_version(void);

/* A store handle owns the repository in <dir> plus the cross-process lock:
 * exclusive when writable, shared otherwise. */
typedef struct ovc_store ovc_store;

ovc_status ovc_store_open(const char* dir, int writable, ovc_store** out);
void ovc_store_close(ovc_store* store);
const char* ovc_last_error(const ovc_store* store);

/* Seeds the demo scenario; variant is "successful" or "violated". */
ovc_status ovc_seed_demo(ovc_store* store, const char* variant);

/* Runs the five validation steps and writes the results into the store.
 * instance_file_idshort may be NULL for the default file element. Any of
 * text_report/satisfied/violated/undefined_count may be NULL. */
ovc_status ovc_validate(ovc_store* store, const char* instance_file_idshort,
                        char** text_report, int* satisfied, int* violated,
                        int* undefined_count);

/* Parses value_text according to the property's declared value type. */
ovc_status ovc_set_property(ovc_store* store, const char* submodel_id,
                            const char* idshort_path, const char* value_text);

/* Latest structured validation report (JSON document), if any run completed. */
ovc_status ovc_latest_report(ovc_store* store, char** json);

/* Interchange exports built from the stored AML files. */
ovc_status ovc_export_ecore(ovc_store* store, char** xml);
ovc_status ovc_export_xmi(ovc_store* store, const char* instance_file_idshort, char** xml);

/* HTTP service over the store. The store must stay open while the server
 * runs. port 0 picks a free port; ovc_server_port reports the actual one. */
typedef struct ovc_server ovc_server;

ovc_status ovc_server_start(ovc_store* store, const char* host, int port, ovc_server** out);
int ovc_server_port(const ovc_server* server);
void ovc_server_stop(ovc_server* server);

void ovc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* OVC_H */
