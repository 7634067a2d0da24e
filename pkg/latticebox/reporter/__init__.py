from dataclasses import dataclass
from time import time
from typing import Any, List

from mashumaro import DataClassDictMixin

from latticebox.reporter.formatters.progress import ProgressFormatter

from .notifications import NotificationType


@dataclass
class Check(DataClassDictMixin):
    """One compared quantity; expected and actual are rendered as text."""
    name: str
    expected: str
    actual: str
    passed: bool

    @classmethod
    def compare(cls, name: str, expected: Any, actual: Any) -> 'Check':
        return cls(name=name, expected=str(expected), actual=str(actual), passed=expected == actual)


class Reporter:
    def __init__(self, output=None, color: bool = True):
        self.checks: List[Check] = []
        self.failed_checks: List[Check] = []
        self.listeners = {}
        self.start_time = None
        self.stop_time = None

        formatter = ProgressFormatter(output=output, color=color)
        for notification_type in NotificationType.all():
            self.listeners[notification_type] = [formatter]

    def register_listener(self, listener, *notifications):
        for notification in notifications:
            self.listeners[notification].append(listener)

    def _listeners(self, notification):
        return list(self.listeners[notification])

    def _reset(self):
        self.checks = []
        self.failed_checks = []
        self.start_time = None
        self.stop_time = None

    def start(self):
        self._reset()
        self.start_time = time()

    def check(self, check: Check) -> Check:
        if self.start_time is None:
            self.start()
        self.checks.append(check)
        self.notify(NotificationType.CHECK_STARTED, check)
        if check.passed:
            self.notify(NotificationType.CHECK_PASSED, check)
        else:
            self.failed_checks.append(check)
            self.notify(NotificationType.CHECK_FAILED, check)
        return check

    def stop(self):
        self.stop_time = time()
        self.notify(NotificationType.STOP)

    def notify(self, notification_type: NotificationType, obj=None):
        for formatter in self._listeners(notification_type):
            getattr(formatter, notification_type.value)(obj)

    def _total_time(self) -> float:
        if self.stop_time and self.start_time:
            return round(self.stop_time - self.start_time, 2)
        return 0.0

    @property
    def passed(self) -> bool:
        return not self.failed_checks

    def finish(self):
        if self.start_time is None:
            return
        self.stop()

        summary = {
            'failed_count': len(self.failed_checks),
            'check_count': len(self.checks),
            'total_time': self._total_time(),
        }

        self.notify(NotificationType.START_DUMP)
        self.notify(NotificationType.DUMP_FAILURES, self.failed_checks)
        self.notify(NotificationType.DUMP_SUMMARY, summary)
