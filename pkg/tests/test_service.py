import json
import threading
import urllib.error
import urllib.request
from http.server import BaseHTTPRequestHandler, HTTPServer

import pytest

from newscheck.errors import DataError, ExtractionError, FetchError
from newscheck.labels import LABEL_NONE, LABEL_PROPAGANDA
from newscheck.service import (
    NewsCheckService,
    RequestLog,
    ServiceConfig,
    extract_article,
    fetch_url,
    load_config,
    make_server,
)
from newscheck.synthesis import MATERIAL

PROP_TEXT_RU = " ".join(MATERIAL["ru"]["fillers"][:3] + MATERIAL["ru"]["propaganda"][:3])
CLEAN_TEXT_EN = " ".join(MATERIAL["en"]["fillers"][:4] + MATERIAL["en"]["clean"][:2])


@pytest.fixture()
def service(registry, tmp_path):
    config = ServiceConfig(
        registry_dir="unused",
        log_path=str(tmp_path / "requests.jsonl"),
    )
    return NewsCheckService(config, registry=registry)


def test_extract_article_prefers_dominant_block():
    html = """
    <html><body>
    <nav><a href="/">Home</a><a href="/b">B</a></nav>
    <p>This is the single long paragraph of actual article text that should win,
    because every other block is either navigation chrome or pure links.</p>
    <footer><a href="/i">Imprint</a></footer>
    </body></html>
    """
    text = extract_article(html)
    assert text.startswith("This is the single long paragraph")
    assert "Imprint" not in text and "Home" not in text


def test_extract_article_rejects_link_farms():
    html = """
    <html><body>
    <p><a href="/1">one link</a></p>
    <p><a href="/2">another link</a> <a href="/3">third link</a></p>
    </body></html>
    """
    with pytest.raises(ExtractionError, match="no article content"):
        extract_article(html)


def test_extract_article_rejects_empty():
    with pytest.raises(ExtractionError):
        extract_article("   ")


def test_extract_article_golden_fixture(fixtures_dir):
    html = (fixtures_dir / "html" / "news_page.html").read_text(encoding="utf-8")
    golden = (fixtures_dir / "html" / "news_page_golden.txt").read_text(encoding="utf-8").strip()
    assert extract_article(html) == golden


def test_fetch_url_rejects_bad_scheme():
    with pytest.raises(FetchError, match="fetch blocked"):
        fetch_url("ftp://example.org/x", timeout=1.0, max_bytes=1000)


def test_handle_check_text(service):
    response = service.handle_check({"text": PROP_TEXT_RU})
    assert response.status == 200
    body = response.body
    assert body["language"] == "ru"
    assert body["verdict"]["label"] in (LABEL_PROPAGANDA, LABEL_NONE)
    assert body["request_id"]
    assert service.log.line_count() == 1
    record = RequestLog.replay(service.log.path)[0]
    assert record["record_type"] == "check"
    assert record["language"] == "ru"
    assert len(record["input_sha256"]) == 64
    assert "text" not in record  # hash-only by default


def test_handle_check_requires_exactly_one_source(service):
    assert service.handle_check({"text": "x", "url": "http://a"}).status == 400
    assert service.handle_check({}).status == 400
    assert service.log.line_count() == 0


def test_handle_check_oversize(registry, tmp_path):
    config = ServiceConfig(
        registry_dir="unused",
        log_path=str(tmp_path / "log.jsonl"),
        max_input_bytes=100,
    )
    service = NewsCheckService(config, registry=registry)
    response = service.handle_check({"text": "x" * 200})
    assert response.status == 413
    assert response.body["error"] == "payload_too_large"


def test_handle_check_unsupported_language(service):
    response = service.handle_check({"text": "这是一条用于测试不支持语言处理路径的新闻文本。"})
    assert response.status == 422
    assert response.body["error"] == "unsupported_language"
    assert response.body["language"] == "zh"
    assert service.log.line_count() == 0


def test_handle_check_stores_full_text_when_opted_in(registry, tmp_path):
    config = ServiceConfig(
        registry_dir="unused",
        log_path=str(tmp_path / "log.jsonl"),
        store_full_text=True,
    )
    service = NewsCheckService(config, registry=registry)
    service.handle_check({"text": CLEAN_TEXT_EN})
    record = RequestLog.replay(service.log.path)[0]
    assert record["text"] == CLEAN_TEXT_EN


def test_feedback_flow(service):
    body = service.handle_check({"text": CLEAN_TEXT_EN}).body
    request_id = body["request_id"]

    ok = service.handle_feedback({"request_id": request_id, "label": LABEL_PROPAGANDA})
    assert ok.status == 200
    assert service.log.feedback[request_id] == LABEL_PROPAGANDA

    assert service.handle_feedback({"request_id": "nope", "label": LABEL_PROPAGANDA}).status == 404
    assert service.handle_feedback({"request_id": request_id, "label": "Maybe"}).status == 400

    # second feedback appends; latest wins on read
    service.handle_feedback({"request_id": request_id, "label": LABEL_NONE})
    assert service.log.feedback[request_id] == LABEL_NONE
    records = RequestLog.replay(service.log.path)
    assert [r["record_type"] for r in records] == ["check", "feedback", "feedback"]


def test_log_append_only_and_restart_replay(service, registry):
    body = service.handle_check({"text": CLEAN_TEXT_EN}).body
    before = service.log.path.read_text(encoding="utf-8")
    service.handle_feedback({"request_id": body["request_id"], "label": LABEL_NONE})
    after = service.log.path.read_text(encoding="utf-8")
    assert after.startswith(before)  # existing lines never mutated

    # restart: a fresh service over the same log still knows the request id
    reloaded = NewsCheckService(service.config, registry=registry)
    assert body["request_id"] in reloaded.log.known_ids
    assert reloaded.handle_feedback(
        {"request_id": body["request_id"], "label": LABEL_PROPAGANDA}
    ).status == 200


def test_glossary_endpoint(service):
    ok = service.handle_glossary("de")
    assert ok.status == 200
    assert ok.body["language"] == "de"
    assert all({"id", "term", "explanation"} <= set(e) for e in ok.body["entries"])
    assert service.handle_glossary("zz").status == 404
    assert service.handle_glossary(None).status == 400


def test_health_lists_languages(service):
    response = service.handle_health()
    assert response.status == 200
    assert response.body["status"] == "ok"
    assert response.body["languages"] == ["de", "en", "fr", "it", "ro", "ru", "uk"]


class _FixtureHandler(BaseHTTPRequestHandler):
    page: bytes = b""

    def do_GET(self):
        self.send_response(200)
        self.send_header("Content-Type", "text/html; charset=utf-8")
        self.send_header("Content-Length", str(len(self.page)))
        self.end_headers()
        self.wfile.write(self.page)

    def log_message(self, fmt, *args):
        pass


@pytest.fixture()
def fixture_page_server():
    body = """
    <html><body>
    <nav><a href="/">Home</a></nav>
    <article>
    <p>{}</p>
    </article>
    <footer><a href="/imprint">Imprint</a></footer>
    </body></html>
    """.format(CLEAN_TEXT_EN).encode("utf-8")
    handler = type("Handler", (_FixtureHandler,), {"page": body})
    server = HTTPServer(("127.0.0.1", 0), handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}/article"
    server.shutdown()
    server.server_close()


def test_url_and_text_checks_agree(service, fixture_page_server):
    via_text = service.handle_check({"text": CLEAN_TEXT_EN})
    via_url = service.handle_check({"url": fixture_page_server})
    assert via_url.status == 200
    assert via_url.body["verdict"] == via_text.body["verdict"]
    records = RequestLog.replay(service.log.path)
    assert records[1]["source_url"] == fixture_page_server


def test_url_fetch_failure_returns_502(service):
    response = service.handle_check({"url": "http://127.0.0.1:1/unreachable"})
    assert response.status == 502
    assert response.body["error"] == "fetch_failed"
    assert service.log.line_count() == 0


def _http(method, url, payload=None):
    data = json.dumps(payload).encode("utf-8") if payload is not None else None
    request = urllib.request.Request(
        url, data=data, method=method, headers={"Content-Type": "application/json"}
    )
    try:
        with urllib.request.urlopen(request, timeout=10) as response:
            return response.status, json.loads(response.read()), dict(response.headers)
    except urllib.error.HTTPError as err:
        return err.code, json.loads(err.read()), dict(err.headers)


@pytest.fixture()
def live_server(registry, tmp_path):
    config = ServiceConfig(
        port=0,
        registry_dir="unused",
        log_path=str(tmp_path / "live.jsonl"),
    )
    service = NewsCheckService(config, registry=registry)
    server = make_server(service)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}", service
    server.shutdown()
    server.server_close()


def test_http_round_trip(live_server):
    base, service = live_server
    status, health, headers = _http("GET", base + "/api/health")
    assert status == 200 and len(health["languages"]) == 7
    assert headers.get("Access-Control-Allow-Origin") == "*"

    status, body, _ = _http("POST", base + "/api/check", {"text": PROP_TEXT_RU})
    assert status == 200
    assert body["verdict"]["label"] in (LABEL_PROPAGANDA, LABEL_NONE)

    status, ack, _ = _http("POST", base + "/api/feedback",
                           {"request_id": body["request_id"], "label": LABEL_PROPAGANDA})
    assert status == 200 and ack["status"] == "recorded"

    status, glossary, _ = _http("GET", base + "/api/glossary?lang=ru")
    assert status == 200 and len(glossary["entries"]) >= 8

    status, err, _ = _http("GET", base + "/api/glossary?lang=zz")
    assert status == 404

    status, err, _ = _http("POST", base + "/api/check", {})
    assert status == 400

    assert service.log.line_count() == 2  # one check + one feedback


def test_http_options_preflight(live_server):
    base, _ = live_server
    request = urllib.request.Request(base + "/api/check", method="OPTIONS")
    with urllib.request.urlopen(request, timeout=10) as response:
        assert response.status == 204
        assert response.headers["Access-Control-Allow-Methods"] == "GET, POST, OPTIONS"


def test_static_file_route(registry, tmp_path):
    static = tmp_path / "static"
    static.mkdir()
    (static / "index.html").write_text("<html><body>ui</body></html>", encoding="utf-8")
    config = ServiceConfig(
        port=0,
        registry_dir="unused",
        log_path=str(tmp_path / "log.jsonl"),
        static_dir=str(static),
    )
    service = NewsCheckService(config, registry=registry)
    server = make_server(service)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        base = f"http://127.0.0.1:{server.server_address[1]}"
        with urllib.request.urlopen(base + "/", timeout=10) as response:
            assert response.status == 200
            assert b"ui" in response.read()
        with pytest.raises(urllib.error.HTTPError):
            urllib.request.urlopen(base + "/../secret", timeout=10)
    finally:
        server.shutdown()
        server.server_close()


def test_load_config_env_overrides(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"port": 9000, "registry_dir": "reg"}), encoding="utf-8")
    config = load_config(path, env={"NEWSCHECK_PORT": "9100", "NEWSCHECK_TRANSLATOR_ENABLED": "true"})
    assert config.port == 9100
    assert config.registry_dir == "reg"
    assert config.translator_enabled is True


def test_load_config_rejects_unknown_keys(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"prot": 1}), encoding="utf-8")
    with pytest.raises(DataError, match="unknown config keys"):
        load_config(path, env={})


def test_request_log_rejects_corrupt_lines(tmp_path):
    path = tmp_path / "log.jsonl"
    path.write_text('{"record_type": "check", "request_id": "a"}\nbroken\n', encoding="utf-8")
    with pytest.raises(DataError, match="corrupt log line"):
        RequestLog(path)
