import json
import logging
import time


class VerificationCheck():
    """
    Abstract class for one verification suite. Represents the basic structure of
    1. listing the cases to check => generate_cases,
    2. checking a single case => check_case, returning None or a failure description,
    3. stopping at the first failure and reporting => run / report.
    """
    name = "check"

    def __init__(self, qmax) -> None:
        self.qmax = qmax
        self.checked = 0
        self.first_failure = None
        self.elapsed = None

    def generate_cases(self):
        """
        Abstract function - should be implemented by subclasses. Yields (label, case) pairs.
        """
        raise(NotImplementedError)

    def check_case(self, label, case):
        """
        Abstract function - should be implemented by subclasses. Returns None if the case holds,
        otherwise a dict describing the first failing identity and degree.
        """
        raise(NotImplementedError)

    def run(self):
        t = time.process_time()
        for label, case in self.generate_cases():
            failure = self.check_case(label, case)
            self.checked += 1
            if failure is not None:
                self.first_failure = {"case": label, **failure}
                logging.warning(f"{self.name}: {label} failed with {failure}.")
                break
        self.elapsed = time.process_time() - t
        logging.info(f"[{self.elapsed:.3f} s] Finished {self.name} on {self.checked} cases.")
        return self.report()

    @property
    def passed(self):
        return self.first_failure is None

    def report(self):
        result = {"check": self.name, "status": "pass" if self.passed else "fail", "qmax": self.qmax, "checked": self.checked}
        if self.first_failure is not None:
            result["first_failure"] = self.first_failure
        return result


def reports_to_json(reports):
    return json.dumps(reports, indent = 2, sort_keys = True, default = str)
