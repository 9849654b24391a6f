"""HTTP transport shared by all clients: fixtures, cache, rate limit, retries.

Requests are normalized into descriptors (method, URL, sorted query params);
the descriptor's SHA-256 keys both the on-disk cache and fixture files. In
offline mode every request must hit a recorded fixture; an unrecorded request
is an error and the live path is never touched.
"""

from __future__ import annotations

import base64
import hashlib
import json
import threading
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable
from urllib.parse import urlsplit

import httpx


class DataSourceError(Exception):
    pass


class TransportError(DataSourceError):
    """Network-level failure (DNS, connect, timeout)."""


class StatusError(DataSourceError):
    """Non-success HTTP status."""

    def __init__(self, status: int, url: str, body: bytes = b""):
        super().__init__(f"HTTP {status} from {url}")
        self.status = status
        self.url = url
        self.body = body


class NotFoundError(StatusError):
    pass


class PayloadError(DataSourceError):
    """Malformed response body; position carries parser context."""

    def __init__(self, message: str, position: str = ""):
        super().__init__(f"{message}{f' at {position}' if position else ''}")
        self.position = position


class FixtureMissingError(DataSourceError):
    def __init__(self, descriptor: "Descriptor"):
        super().__init__(f"no fixture recorded for {descriptor.normalized()}")
        self.descriptor = descriptor


@dataclass(frozen=True)
class Descriptor:
    method: str
    url: str  # scheme://host/path, no query string
    params: tuple[tuple[str, str], ...] = ()

    @classmethod
    def get(cls, url: str, params: dict[str, str] | None = None) -> "Descriptor":
        sorted_params = tuple(sorted((str(k), str(v)) for k, v in (params or {}).items()))
        return cls(method="GET", url=url, params=sorted_params)

    def normalized(self) -> str:
        query = "&".join(f"{k}={v}" for k, v in self.params)
        return f"{self.method} {self.url}" + (f"?{query}" if query else "")

    def key(self) -> str:
        return hashlib.sha256(self.normalized().encode("utf-8")).hexdigest()

    def host(self) -> str:
        return urlsplit(self.url).netloc


@dataclass(frozen=True)
class FetchedResponse:
    status: int
    body: bytes


class FixtureStore:
    """One JSON document per recorded request, named by descriptor hash."""

    def __init__(self, root: Path):
        self.root = Path(root)

    def path_for(self, descriptor: Descriptor) -> Path:
        return self.root / f"{descriptor.key()}.json"

    def get(self, descriptor: Descriptor) -> FetchedResponse | None:
        path = self.path_for(descriptor)
        if not path.exists():
            return None
        doc = json.loads(path.read_text())
        return _response_from_doc(doc)

    def record(self, descriptor: Descriptor, response: FetchedResponse) -> Path:
        self.root.mkdir(parents=True, exist_ok=True)
        path = self.path_for(descriptor)
        doc = {"descriptor": descriptor.normalized(), "status": response.status}
        try:
            doc["body"] = response.body.decode("utf-8")
        except UnicodeDecodeError:
            doc["body_b64"] = base64.b64encode(response.body).decode("ascii")
        path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return path

    def verify(self) -> list[str]:
        """Check each fixture file name matches its recorded descriptor."""
        problems = []
        if not self.root.exists():
            return [f"fixture directory {self.root} does not exist"]
        for path in sorted(self.root.glob("*.json")):
            try:
                doc = json.loads(path.read_text())
                descriptor = doc["descriptor"]
                _response_from_doc(doc)
            except (json.JSONDecodeError, KeyError, ValueError) as exc:
                problems.append(f"{path.name}: unreadable fixture ({exc})")
                continue
            expected = hashlib.sha256(descriptor.encode("utf-8")).hexdigest()
            if path.stem != expected:
                problems.append(f"{path.name}: name does not match descriptor hash {expected[:12]}...")
        return problems


def _response_from_doc(doc: dict) -> FetchedResponse:
    if "body_b64" in doc:
        body = base64.b64decode(doc["body_b64"])
    else:
        body = doc.get("body", "").encode("utf-8")
    return FetchedResponse(status=int(doc["status"]), body=body)


class DiskCache:
    def __init__(self, root: Path, ttl_seconds: float = 7 * 24 * 3600.0):
        self.root = Path(root)
        self.ttl = ttl_seconds

    def get(self, descriptor: Descriptor, now: float | None = None) -> FetchedResponse | None:
        path = self.root / f"{descriptor.key()}.json"
        if not path.exists():
            return None
        doc = json.loads(path.read_text())
        age = (time.time() if now is None else now) - doc["saved_at"]
        if age > self.ttl:
            return None
        return _response_from_doc(doc)

    def put(self, descriptor: Descriptor, response: FetchedResponse, now: float | None = None) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        doc = {
            "descriptor": descriptor.normalized(),
            "saved_at": time.time() if now is None else now,
            "status": response.status,
            "body_b64": base64.b64encode(response.body).decode("ascii"),
        }
        (self.root / f"{descriptor.key()}.json").write_text(json.dumps(doc) + "\n")


class RateLimiter:
    """At most `max_in_flight` concurrent requests per host, optionally spaced."""

    def __init__(self, max_in_flight: int = 4, min_interval: float = 0.0, sleep=time.sleep):
        self.max_in_flight = max_in_flight
        self.min_interval = min_interval
        self._sleep = sleep
        self._lock = threading.Lock()
        self._semaphores: dict[str, threading.Semaphore] = {}
        self._last_start: dict[str, float] = {}

    def _semaphore(self, host: str) -> threading.Semaphore:
        with self._lock:
            if host not in self._semaphores:
                self._semaphores[host] = threading.Semaphore(self.max_in_flight)
            return self._semaphores[host]

    def acquire(self, host: str) -> None:
        self._semaphore(host).acquire()
        if self.min_interval > 0:
            with self._lock:
                now = time.monotonic()
                wait = self._last_start.get(host, -1e9) + self.min_interval - now
                self._last_start[host] = now + max(wait, 0.0)
            if wait > 0:
                self._sleep(wait)

    def release(self, host: str) -> None:
        self._semaphore(host).release()


def _httpx_send(descriptor: Descriptor, timeout: float = 30.0) -> FetchedResponse:
    try:
        response = httpx.request(
            descriptor.method,
            descriptor.url,
            params=dict(descriptor.params),
            timeout=timeout,
            follow_redirects=True,
        )
    except httpx.HTTPError as exc:
        raise TransportError(f"{descriptor.url}: {exc}") from exc
    return FetchedResponse(status=response.status_code, body=response.content)


class HttpTransport:
    """Fetch through fixtures (offline) or cache + rate-limited live calls."""

    def __init__(
        self,
        offline: bool = False,
        fixtures: FixtureStore | None = None,
        cache: DiskCache | None = None,
        limiter: RateLimiter | None = None,
        send: Callable[[Descriptor], FetchedResponse] | None = None,
        retries: int = 3,
        backoff: float = 0.5,
        sleep=time.sleep,
    ):
        if offline and fixtures is None:
            raise ValueError("offline mode requires a fixture store")
        self.offline = offline
        self.fixtures = fixtures
        self.cache = cache
        self.limiter = limiter or RateLimiter()
        self.send = send or _httpx_send
        self.retries = retries
        self.backoff = backoff
        self._sleep = sleep

    def get(self, url: str, params: dict[str, str] | None = None) -> FetchedResponse:
        return self.fetch(Descriptor.get(url, params))

    def fetch(self, descriptor: Descriptor) -> FetchedResponse:
        if self.offline:
            recorded = self.fixtures.get(descriptor)
            if recorded is None:
                raise FixtureMissingError(descriptor)
            return self._checked(descriptor, recorded)

        if self.cache is not None:
            cached = self.cache.get(descriptor)
            if cached is not None:
                return self._checked(descriptor, cached)

        response = self._fetch_live(descriptor)
        if self.cache is not None and 200 <= response.status < 300:
            self.cache.put(descriptor, response)
        return self._checked(descriptor, response)

    def _fetch_live(self, descriptor: Descriptor) -> FetchedResponse:
        host = descriptor.host()
        last_error: Exception | None = None
        for attempt in range(self.retries):
            if attempt > 0:
                self._sleep(self.backoff * (2 ** (attempt - 1)))
            self.limiter.acquire(host)
            try:
                response = self.send(descriptor)
            except TransportError as exc:
                last_error = exc
                continue
            finally:
                self.limiter.release(host)
            if response.status >= 500:
                last_error = StatusError(response.status, descriptor.url, response.body)
                continue
            return response
        raise last_error

    @staticmethod
    def _checked(descriptor: Descriptor, response: FetchedResponse) -> FetchedResponse:
        if response.status == 404:
            raise NotFoundError(404, descriptor.url, response.body)
        if not 200 <= response.status < 300:
            raise StatusError(response.status, descriptor.url, response.body)
        return response


def parse_json(response: FetchedResponse, url: str):
    try:
        return json.loads(response.body.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise PayloadError(f"{url}: body is not UTF-8", position=f"byte {exc.start}") from exc
    except json.JSONDecodeError as exc:
        raise PayloadError(f"{url}: {exc.msg}", position=f"line {exc.lineno} column {exc.colno}") from exc
