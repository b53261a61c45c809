#!/usr/bin/env python3
"""Start the HTTP service against the demo registry and exercise every
endpoint once with a plain urllib client.

Run demos/04_full_pipeline.py first (or let this script build the registry),
then try the same calls with curl:

    curl -s localhost:8400/api/health | python3 -m json.tool
    curl -s -X POST localhost:8400/api/check -d '{"text": "..."}'
    curl -s -X POST localhost:8400/api/feedback -d '{"request_id": "...", "label": "Propaganda"}'
    curl -s 'localhost:8400/api/glossary?lang=de'
"""

import json
import threading
import urllib.request
from pathlib import Path

from newscheck.service import NewsCheckService, ServiceConfig, make_server
from newscheck.training import build_registry_dir

registry_dir = Path("registry-demo")
if not (registry_dir / "models").is_dir() or not any((registry_dir / "models").iterdir()):
    print("building demo registry...")
    build_registry_dir(registry_dir, docs_per_language=60, seed=13)

config = ServiceConfig(
    host="127.0.0.1",
    port=0,  # pick a free port for the scripted tour; use 8400 for curl sessions
    registry_dir=str(registry_dir),
    log_path="registry-demo/requests.jsonl",
)
service = NewsCheckService(config)
server = make_server(service)
base = f"http://127.0.0.1:{server.server_address[1]}"
threading.Thread(target=server.serve_forever, daemon=True).start()
print(f"service listening on {base}\n")


def call(method, path, payload=None):
    data = json.dumps(payload).encode() if payload is not None else None
    request = urllib.request.Request(base + path, data=data, method=method,
                                     headers={"Content-Type": "application/json"})
    with urllib.request.urlopen(request, timeout=10) as response:
        return json.loads(response.read())

health = call("GET", "/api/health")
print("GET /api/health ->", health["status"], "| languages:", ", ".join(health["languages"]))

body = call("POST", "/api/check", {"text": (
    "Комментаторы сообщили, что тайные биолаборатории доказывают: коллективный "
    "запад не заслуживает доверия. Музей продлевает часы работы на летний сезон."
)})
print(f"POST /api/check -> {body['verdict']['label']} p={body['verdict']['probability']:.3f} "
      f"({body['language']}); request_id {body['request_id'][:12]}...")

ack = call("POST", "/api/feedback", {"request_id": body["request_id"], "label": "Propaganda"})
print("POST /api/feedback ->", ack["status"])

glossary = call("GET", "/api/glossary?lang=ru")
print(f"GET /api/glossary?lang=ru -> {len(glossary['entries'])} entries; first: "
      f"{glossary['entries'][0]['term']}")

print(f"\nrequest log: {service.log.path} ({service.log.line_count()} lines)")
server.shutdown()
server.server_close()
