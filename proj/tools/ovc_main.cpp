// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library exclusively through the C
// API in include/ovc.h.

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "ovc.h"

namespace {

std::atomic<bool> g_stop{false};

void handle_signal(int) { g_stop = true; }

struct StoreHandle {
  ovc_store* store = nullptr;
  ~StoreHandle() {
    if (store) ovc_store_close(store);
  }
};

int open_store(const std::string& dir, bool writable, StoreHandle& handle) {
  ovc_status status = ovc_store_open(dir.c_str(), writable ? 1 : 0, &handle.store);
  if (status == OVC_OK) return 0;
  if (status == OVC_E_LOCKED)
    std::cerr << "ovc: store '" << dir << "' is locked by another process\n";
  else
    std::cerr << "ovc: cannot open store '" << dir << "' (" << ovc_status_name(status) << ")\n";
  return 1;
}

int fail_with(ovc_store* store, ovc_status status) {
  const char* message = store ? ovc_last_error(store) : "";
  std::cerr << "ovc: " << (message && *message ? message : ovc_status_name(status)) << "\n";
  return 1;
}

bool split_bind(const std::string& bind, std::string& host, int& port) {
  auto pos = bind.rfind(':');
  if (pos == std::string::npos || pos + 1 == bind.size()) return false;
  host = bind.substr(0, pos);
  try {
    port = std::stoi(bind.substr(pos + 1));
  } catch (...) {
    return false;
  }
  return port > 0 && port < 65536;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"OVC - OCL constraint validation over Asset Administration Shell stores"};
  app.require_subcommand(1);

  std::string store_dir;
  app.add_option("--store", store_dir, "Store directory")
      ->envname("OVC_STORE")
      ->required();

  auto* seed = app.add_subcommand("seed-demo", "Seed the demo scenario into the store");
  std::string variant = "successful";
  seed->add_option("--variant", variant, "Scenario variant")
      ->check(CLI::IsMember({"successful", "violated"}))
      ->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Run constraint validation and print the report");
  std::string instance_id_short;
  validate->add_option("--instance", instance_id_short,
                       "idShort of the instance file element to validate");

  auto* set_prop = app.add_subcommand("set-prop", "Update a Property value");
  std::string submodel_id, idshort_path, value_text;
  set_prop->add_option("submodel-id", submodel_id, "Submodel id")->required();
  set_prop->add_option("idshort-path", idshort_path, "Element idShort path")->required();
  set_prop->add_option("value", value_text, "New value")->required();

  auto* report = app.add_subcommand("report", "Print the latest validation report (JSON)");

  auto* exp = app.add_subcommand("export", "Write interchange files built from the stored models");
  bool export_ecore = false, export_xmi = false;
  std::string out_path;
  std::string export_instance;
  exp->add_flag("--ecore", export_ecore, "Export the type model");
  exp->add_flag("--xmi", export_xmi, "Export an instance model");
  exp->add_option("--out", out_path, "Output file")->required();
  exp->add_option("--instance", export_instance, "idShort of the instance file element");

  auto* serve = app.add_subcommand("serve", "Serve the HTTP API over the store");
  std::string bind = "127.0.0.1:8081";
  serve->add_option("--bind", bind, "host:port to listen on")
      ->envname("OVC_BIND")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (*seed) {
    StoreHandle handle;
    if (open_store(store_dir, true, handle)) return 1;
    ovc_status status = ovc_seed_demo(handle.store, variant.c_str());
    if (status != OVC_OK) return fail_with(handle.store, status);
    std::cout << "seeded demo scenario (" << variant << ") into " << store_dir << "\n";
    return 0;
  }

  if (*validate) {
    StoreHandle handle;
    if (open_store(store_dir, true, handle)) return 1;
    char* text = nullptr;
    int satisfied = 0, violated = 0, undefined_count = 0;
    ovc_status status = ovc_validate(handle.store,
                                     instance_id_short.empty() ? nullptr : instance_id_short.c_str(),
                                     &text, &satisfied, &violated, &undefined_count);
    if (status != OVC_OK) return fail_with(handle.store, status);
    std::cout << text;
    ovc_string_free(text);
    if (violated > 0) return 2;
    if (undefined_count > 0) return 3;
    return 0;
  }

  if (*set_prop) {
    StoreHandle handle;
    if (open_store(store_dir, true, handle)) return 1;
    ovc_status status =
        ovc_set_property(handle.store, submodel_id.c_str(), idshort_path.c_str(), value_text.c_str());
    if (status != OVC_OK) return fail_with(handle.store, status);
    std::cout << idshort_path << " = " << value_text << "\n";
    return 0;
  }

  if (*report) {
    StoreHandle handle;
    if (open_store(store_dir, false, handle)) return 1;
    char* json = nullptr;
    ovc_status status = ovc_latest_report(handle.store, &json);
    if (status == OVC_E_NOT_FOUND) {
      std::cerr << "ovc: no report yet\n";
      return 1;
    }
    if (status != OVC_OK) return fail_with(handle.store, status);
    std::cout << json;
    ovc_string_free(json);
    return 0;
  }

  if (*exp) {
    if (export_ecore == export_xmi) {
      std::cerr << "ovc: pass exactly one of --ecore or --xmi\n";
      return 1;
    }
    StoreHandle handle;
    if (open_store(store_dir, false, handle)) return 1;
    char* xml = nullptr;
    ovc_status status =
        export_ecore
            ? ovc_export_ecore(handle.store, &xml)
            : ovc_export_xmi(handle.store,
                             export_instance.empty() ? nullptr : export_instance.c_str(), &xml);
    if (status != OVC_OK) return fail_with(handle.store, status);
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "ovc: cannot write " << out_path << "\n";
      ovc_string_free(xml);
      return 1;
    }
    out << xml;
    ovc_string_free(xml);
    std::cout << "wrote " << out_path << "\n";
    return 0;
  }

  if (*serve) {
    std::string host;
    int port = 0;
    if (!split_bind(bind, host, port)) {
      std::cerr << "ovc: --bind must be host:port, got '" << bind << "'\n";
      return 1;
    }
    StoreHandle handle;
    if (open_store(store_dir, true, handle)) return 1;
    ovc_server* server = nullptr;
    ovc_status status = ovc_server_start(handle.store, host.c_str(), port, &server);
    if (status != OVC_OK) return fail_with(handle.store, status);
    std::cout << "serving " << store_dir << " on http://" << host << ":"
              << ovc_server_port(server) << "/api/v1\n";
    std::signal(SIGINT, handle_signal);
    std::signal(SIGTERM, handle_signal);
    while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));
    ovc_server_stop(server);
    return 0;
  }

  return 1;
}
