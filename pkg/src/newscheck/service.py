"""HTTP analysis service.

JSON API over stdlib threading HTTP server: check a text or URL, collect
user feedback labels, serve glossaries, report health. Every successful
check appends exactly one record to a line-delimited JSON log; feedback
appends follow-up records linked by request id, so replaying the log
reconstructs the full history. The model registry is read-only shared
state; log appends are serialized through one lock.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import threading
import urllib.error
import urllib.parse
import urllib.request
import uuid
from dataclasses import dataclass
from datetime import datetime, timezone
from html.parser import HTMLParser
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .errors import (
    DataError,
    ExtractionError,
    FetchError,
    NewsCheckError,
    UnsupportedLanguageError,
)
from .labels import LABEL_NONE, LABEL_PROPAGANDA
from .pipeline import Translator, check
from .registry import Registry

DEFAULT_MAX_INPUT_BYTES = 1 << 20  # 1 MiB
DEFAULT_FETCH_TIMEOUT = 10.0

_ENV_PREFIX = "NEWSCHECK_"


@dataclass
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8400
    registry_dir: str = "registry"
    log_path: str = "newscheck-requests.jsonl"
    translator_enabled: bool = False
    max_input_bytes: int = DEFAULT_MAX_INPUT_BYTES
    fetch_timeout: float = DEFAULT_FETCH_TIMEOUT
    static_dir: str | None = None
    store_full_text: bool = False
    cors_origin: str = "*"

    def __post_init__(self):
        if self.max_input_bytes <= 0:
            raise DataError("max_input_bytes must be positive")


def load_config(path: str | Path | None = None, env: dict[str, str] | None = None) -> ServiceConfig:
    """Config file plus NEWSCHECK_* environment overrides.

    Recognized variables: NEWSCHECK_HOST, NEWSCHECK_PORT,
    NEWSCHECK_REGISTRY_DIR, NEWSCHECK_LOG_PATH, NEWSCHECK_TRANSLATOR_ENABLED,
    NEWSCHECK_MAX_INPUT_BYTES, NEWSCHECK_FETCH_TIMEOUT, NEWSCHECK_STATIC_DIR,
    NEWSCHECK_STORE_FULL_TEXT, NEWSCHECK_CORS_ORIGIN.
    """
    values: dict = {}
    if path is not None:
        try:
            values.update(json.loads(Path(path).read_text(encoding="utf-8")))
        except (OSError, json.JSONDecodeError) as exc:
            raise DataError(f"{path}: cannot read config: {exc}") from exc
    env = os.environ if env is None else env
    casts = {
        "host": str, "port": int, "registry_dir": str, "log_path": str,
        "translator_enabled": _parse_bool, "max_input_bytes": int,
        "fetch_timeout": float, "static_dir": str, "store_full_text": _parse_bool,
        "cors_origin": str,
    }
    for key, cast in casts.items():
        raw = env.get(_ENV_PREFIX + key.upper())
        if raw is not None:
            values[key] = cast(raw)
    unknown = set(values) - set(casts)
    if unknown:
        raise DataError(f"unknown config keys: {sorted(unknown)}")
    return ServiceConfig(**values)


def _parse_bool(raw: str) -> bool:
    if raw.lower() in ("1", "true", "yes", "on"):
        return True
    if raw.lower() in ("0", "false", "no", "off"):
        return False
    raise DataError(f"not a boolean: {raw!r}")


class RequestLog:
    """Append-only JSONL log with a single serialized writer.

    Each line is one record with ``record_type`` of "check" or "feedback".
    Opening an existing log replays it so known request ids and the
    latest-wins feedback view survive restarts.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self.known_ids: set[str] = set()
        self.feedback: dict[str, str] = {}
        if self.path.exists():
            for record in self.replay(self.path):
                self._absorb(record)

    @staticmethod
    def replay(path: str | Path) -> list[dict]:
        records = []
        for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
            if not line.strip():
                continue
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise DataError(f"{path}:{lineno}: corrupt log line: {exc}") from exc
        return records

    def _absorb(self, record: dict) -> None:
        if record.get("record_type") == "check":
            self.known_ids.add(record["request_id"])
        elif record.get("record_type") == "feedback":
            self.feedback[record["request_id"]] = record["user_label"]

    def append(self, record: dict) -> None:
        line = json.dumps(record, ensure_ascii=False)
        with self._lock:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")
                fh.flush()
            self._absorb(record)

    def line_count(self) -> int:
        if not self.path.exists():
            return 0
        return sum(1 for line in self.path.read_text(encoding="utf-8").splitlines() if line.strip())


_BLOCK_TAGS = {
    "p", "div", "article", "section", "main", "li", "td", "blockquote",
    "h1", "h2", "h3", "h4", "h5", "h6", "pre", "figcaption",
}
_SKIP_TAGS = {"script", "style", "nav", "header", "footer", "aside", "noscript", "template", "head", "title"}


class _ArticleParser(HTMLParser):
    """Collect block-level text runs with their link-character counts."""

    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.blocks: list[tuple[str, int]] = []  # (text, chars inside <a>)
        self._skip_depth = 0
        self._link_depth = 0
        self._text: list[str] = []
        self._link_chars = 0

    def _flush(self):
        text = re.sub(r"\s+", " ", "".join(self._text)).strip()
        if text:
            self.blocks.append((text, self._link_chars))
        self._text = []
        self._link_chars = 0

    def handle_starttag(self, tag, attrs):
        if tag in _SKIP_TAGS:
            self._skip_depth += 1
        elif tag in _BLOCK_TAGS:
            self._flush()
        elif tag == "a":
            self._link_depth += 1
        elif tag == "br":
            self._text.append(" ")

    def handle_endtag(self, tag):
        if tag in _SKIP_TAGS:
            self._skip_depth = max(0, self._skip_depth - 1)
        elif tag in _BLOCK_TAGS:
            self._flush()
        elif tag == "a":
            self._link_depth = max(0, self._link_depth - 1)

    def handle_data(self, data):
        if self._skip_depth:
            return
        self._text.append(data)
        if self._link_depth:
            self._link_chars += len(data.strip())

    def close(self):
        super().close()
        self._flush()


def extract_article(html: str) -> str:
    """Heuristic main-content extraction.

    Scripts, styles, and chrome regions are dropped; remaining block-level
    text runs are filtered to link density below 0.5, and the contiguous run
    of surviving blocks with the largest total text length wins.
    """
    if not html or not html.strip():
        raise ExtractionError("no article content: empty page")
    parser = _ArticleParser()
    parser.feed(html)
    parser.close()
    eligible = [
        text if len(text) and link_chars / len(text) < 0.5 else None
        for text, link_chars in parser.blocks
    ]
    best: list[str] = []
    best_len = -1
    run: list[str] = []
    for block in eligible + [None]:
        if block is None:
            if run and sum(map(len, run)) > best_len:
                best, best_len = run, sum(map(len, run))
            run = []
        else:
            run.append(block)
    if not best:
        raise ExtractionError("no article content")
    return "\n\n".join(best)


def fetch_url(url: str, timeout: float, max_bytes: int) -> str:
    """GET a page and decode it; any transport failure maps to FetchError."""
    parsed = urllib.parse.urlparse(url)
    if parsed.scheme not in ("http", "https"):
        raise FetchError(f"fetch blocked: unsupported scheme {parsed.scheme!r}")
    request = urllib.request.Request(url, headers={"User-Agent": "newscheck/0.1"})
    try:
        with urllib.request.urlopen(request, timeout=timeout) as response:
            body = response.read(max_bytes + 1)
            charset = response.headers.get_content_charset() or "utf-8"
    except (urllib.error.URLError, OSError, ValueError) as exc:
        raise FetchError(f"fetch failed: {exc}") from exc
    if len(body) > max_bytes:
        raise FetchError("fetch failed: response exceeds size limit")
    return body.decode(charset, errors="replace")


@dataclass
class ApiResponse:
    status: int
    body: dict


def _error(status: int, code: str, message: str, **extra) -> ApiResponse:
    body = {"error": code, "message": message}
    body.update(extra)
    return ApiResponse(status=status, body=body)


class NewsCheckService:
    """Transport-free request handlers; the HTTP layer is a thin shell."""

    def __init__(self, config: ServiceConfig, registry: Registry | None = None,
                 translator: Translator | None = None):
        self.config = config
        self.registry = registry if registry is not None else Registry.load(config.registry_dir)
        if translator is not None:
            self.translator = translator
        elif config.translator_enabled:
            self.translator = Translator()  # unconfigured default; errors on use
        else:
            self.translator = None
        self.log = RequestLog(config.log_path)

    def handle_check(self, payload: dict) -> ApiResponse:
        text = payload.get("text")
        url = payload.get("url")
        if (text is None) == (url is None):
            return _error(400, "bad_request", "provide exactly one of 'text' or 'url'")
        source_url = None
        if url is not None:
            if not isinstance(url, str) or not url.strip():
                return _error(400, "bad_request", "'url' must be a non-empty string")
            source_url = url
            try:
                html = fetch_url(url, self.config.fetch_timeout, self.config.max_input_bytes)
                text = extract_article(html)
            except FetchError as exc:
                return _error(502, "fetch_failed", str(exc))
            except ExtractionError as exc:
                return _error(422, "no_article_content", str(exc))
        if not isinstance(text, str) or not text.strip():
            return _error(400, "bad_request", "'text' must be a non-empty string")
        if len(text.encode("utf-8")) > self.config.max_input_bytes:
            return _error(413, "payload_too_large",
                          f"input exceeds {self.config.max_input_bytes} bytes")
        try:
            result = check(text, self.registry, translator=self.translator)
        except UnsupportedLanguageError as exc:
            return _error(422, "unsupported_language", str(exc), language=exc.language)
        except NewsCheckError as exc:
            return _error(422, "check_failed", str(exc))
        request_id = uuid.uuid4().hex
        record = {
            "record_type": "check",
            "request_id": request_id,
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "input_sha256": hashlib.sha256(text.encode("utf-8")).hexdigest(),
            "language": result.language,
            "label": result.verdict.label,
            "probability": result.verdict.probability,
            "neural_prob": result.verdict.neural_prob,
            "svm_label": result.verdict.svm_label,
            "arbitration_applied": result.verdict.arbitration_applied,
            "flipped": result.verdict.flipped,
        }
        if source_url is not None:
            record["source_url"] = source_url
        if self.config.store_full_text:
            record["text"] = text
        self.log.append(record)
        body = result.as_dict()
        body["request_id"] = request_id
        return ApiResponse(status=200, body=body)

    def handle_feedback(self, payload: dict) -> ApiResponse:
        request_id = payload.get("request_id")
        label = payload.get("label")
        if not isinstance(request_id, str) or not request_id:
            return _error(400, "bad_request", "'request_id' is required")
        if label not in (LABEL_PROPAGANDA, LABEL_NONE):
            return _error(400, "invalid_label",
                          f"label must be {LABEL_PROPAGANDA!r} or {LABEL_NONE!r}")
        if request_id not in self.log.known_ids:
            return _error(404, "unknown_request_id", f"no check with id {request_id!r}")
        self.log.append(
            {
                "record_type": "feedback",
                "request_id": request_id,
                "timestamp": datetime.now(timezone.utc).isoformat(),
                "user_label": label,
            }
        )
        return ApiResponse(status=200, body={"status": "recorded", "request_id": request_id})

    def handle_glossary(self, language: str | None) -> ApiResponse:
        if not language:
            return _error(400, "bad_request", "query parameter 'lang' is required")
        try:
            glossary = self.registry.glossary(language)
        except DataError:
            return _error(404, "not_found", f"no glossary for language {language!r}")
        return ApiResponse(
            status=200,
            body={
                "language": language,
                "entries": [
                    {"id": e.id, "term": e.term, "explanation": e.explanation}
                    for e in glossary.entries
                ],
            },
        )

    def handle_health(self) -> ApiResponse:
        inventory = self.registry.inventory()
        return ApiResponse(
            status=200,
            body={
                "status": "ok",
                "languages": inventory["languages"],
                "models": inventory["detail"],
                "translator": self.translator is not None,
            },
        )


class _Handler(BaseHTTPRequestHandler):
    service: NewsCheckService  # injected by make_server
    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):  # keep test output quiet
        pass

    def _send(self, response: ApiResponse) -> None:
        payload = json.dumps(response.body, ensure_ascii=False).encode("utf-8")
        self.send_response(response.status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(payload)))
        self._cors()
        self.end_headers()
        self.wfile.write(payload)

    def _cors(self) -> None:
        self.send_header("Access-Control-Allow-Origin", self.service.config.cors_origin)
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def _read_json(self) -> dict | ApiResponse:
        length = int(self.headers.get("Content-Length") or 0)
        if length > self.service.config.max_input_bytes:
            return _error(413, "payload_too_large",
                          f"request body exceeds {self.service.config.max_input_bytes} bytes")
        raw = self.rfile.read(length) if length else b""
        try:
            payload = json.loads(raw.decode("utf-8") or "{}")
        except (UnicodeDecodeError, json.JSONDecodeError):
            return _error(400, "bad_request", "request body must be JSON")
        if not isinstance(payload, dict):
            return _error(400, "bad_request", "request body must be a JSON object")
        return payload

    def do_OPTIONS(self):
        self.send_response(204)
        self._cors()
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_POST(self):
        path = urllib.parse.urlparse(self.path).path
        payload = self._read_json()
        if isinstance(payload, ApiResponse):
            self._send(payload)
            return
        if path == "/api/check":
            self._send(self.service.handle_check(payload))
        elif path == "/api/feedback":
            self._send(self.service.handle_feedback(payload))
        else:
            self._send(_error(404, "not_found", f"no such endpoint: {path}"))

    def do_GET(self):
        parsed = urllib.parse.urlparse(self.path)
        if parsed.path == "/api/health":
            self._send(self.service.handle_health())
        elif parsed.path == "/api/glossary":
            lang = urllib.parse.parse_qs(parsed.query).get("lang", [None])[0]
            self._send(self.service.handle_glossary(lang))
        elif self.service.config.static_dir:
            self._send_static(parsed.path)
        else:
            self._send(_error(404, "not_found", f"no such endpoint: {parsed.path}"))

    def _send_static(self, path: str) -> None:
        root = Path(self.service.config.static_dir).resolve()
        relative = path.lstrip("/") or "index.html"
        target = (root / relative).resolve()
        if root not in target.parents and target != root:
            self._send(_error(404, "not_found", "outside static root"))
            return
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            self._send(_error(404, "not_found", f"no such file: {path}"))
            return
        content_types = {
            ".html": "text/html; charset=utf-8",
            ".js": "text/javascript; charset=utf-8",
            ".css": "text/css; charset=utf-8",
            ".json": "application/json; charset=utf-8",
            ".svg": "image/svg+xml",
            ".png": "image/png",
            ".ico": "image/x-icon",
        }
        body = target.read_bytes()
        self.send_response(200)
        self.send_header("Content-Type", content_types.get(target.suffix, "application/octet-stream"))
        self.send_header("Content-Length", str(len(body)))
        self._cors()
        self.end_headers()
        self.wfile.write(body)


def make_server(service: NewsCheckService) -> ThreadingHTTPServer:
    """Bind the configured address and return the (not yet running) server."""
    handler = type("BoundHandler", (_Handler,), {"service": service})
    return ThreadingHTTPServer((service.config.host, service.config.port), handler)


def serve_forever(service: NewsCheckService) -> None:
    server = make_server(service)
    try:
        server.serve_forever()
    finally:
        server.server_close()
