"""Hand-built decision-block cases targeting each extraction rule.

Every case lists its step sentences, paragraph breaks, the decision
position, and the hand-listed expected member set, plus which rule (if
any) is required to get it right. 44 decision points total, including
empty blocks.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from procmine.flow import DecisionPoint, Procedure, Step
from procmine.ingest import Sentence
from procmine.linguistics import detect_conditional


@dataclass
class BlockCase:
    name: str
    steps: list[list[str]]
    decision: tuple[int, int]
    expected: frozenset[tuple[int, int]]
    needs_rule: str  # "none" | "note" | "structure" | "overlap"
    breaks: dict[int, list[int]] = field(default_factory=dict)

    def procedure(self) -> Procedure:
        steps = [
            Step(index=i,
                 sentences=[Sentence.from_text(t) for t in texts],
                 sublist_paths=[],
                 paragraph_breaks=list(self.breaks.get(i, [])))
            for i, texts in enumerate(self.steps)
        ]
        return Procedure(doc_url=f"fixture://{self.name}", node_path=(0,),
                         steps=steps, context=[])

    def decision_point(self) -> DecisionPoint:
        proc = self.procedure()
        si, qi = self.decision
        split = detect_conditional(proc.steps[si].sentences[qi])
        assert split is not None, f"{self.name}: decision sentence not detected"
        return DecisionPoint(si, qi, split)


def _case(name, steps, decision, expected, needs_rule, breaks=None):
    return BlockCase(name=name, steps=steps, decision=decision,
                     expected=frozenset(expected), needs_rule=needs_rule,
                     breaks=breaks or {})


def build_cases() -> list[BlockCase]:
    cases: list[BlockCase] = []

    # --- empty blocks: decision ends its step, next step unrelated -------
    empty_specs = [
        ("If the light is blinking, replace the battery.", "Close the cover."),
        ("If the error persists, contact support.", "Restart the server."),
        ("When the download completes, run the installer.", "Save the log."),
        ("If the fan is loud, clean the dust filter.", "Check the vents."),
        ("Unless the seal is intact, return the unit.", "File the report."),
        ("If the screen stays dark, reseat the video cable.", "Press the power button."),
        ("When the update finishes, reboot the router.", "Verify the firmware version."),
        ("If the tray is empty, load more paper.", "Resume the print job."),
        ("If the charge is low, connect the charger.", "Continue the test."),
        ("When the alarm sounds, press the mute button.", "Record the alarm code."),
        ("If the port is damaged, use the spare port.", "Label the bad port."),
        ("If the key is lost, request a replacement key.", "Update the inventory."),
    ]
    for i, (cond_sent, follow) in enumerate(empty_specs):
        cases.append(_case(
            f"empty_{i}",
            steps=[["Check the indicator panel.", cond_sent], [follow]],
            decision=(0, 1), expected=set(), needs_rule="none"))

    # --- plain blocks: members run to the end of the step ----------------
    plain_specs = [
        (["If the light is blinking, replace the battery.",
          "Wait twenty seconds.", "Close the cover."], 2),
        (["If the error persists, restart the server.",
          "Check the log output."], 1),
        (["If the cable is loose, reseat the cable.",
          "Tighten the clamp.", "Verify the link light.", "Close the panel."], 3),
        (["When the test fails, repeat the measurement.",
          "Record both readings."], 1),
        (["Unless the pump is primed, fill the reservoir.",
          "Open the bleed valve."], 1),
        (["If the page is blank, replace the toner.",
          "Print a test page."], 1),
        (["If the unit overheats, power off the unit.",
          "Wait ten minutes.", "Check the airflow."], 2),
        (["When the icon turns red, stop the transfer.",
          "Disconnect the drive safely."], 1),
        (["If the sensor drifts, recalibrate the sensor.",
          "Log the calibration constants."], 1),
        (["If the door sticks, lubricate the hinge.",
          "Wipe away extra oil."], 1),
        (["When the queue stalls, clear the queue.",
          "Restart the spooler service."], 1),
        (["If the reading is zero, replace the probe.",
          "Rerun the diagnostic."], 1),
    ]
    for i, (sents, n_members) in enumerate(plain_specs):
        cases.append(_case(
            f"plain_{i}",
            steps=[sents, ["Proceed to the next section."]],
            decision=(0, 0),
            expected={(0, k) for k in range(1, 1 + n_members)},
            needs_rule="none"))

    # --- note rule: information sentence ends the block ------------------
    note_specs = [
        (["If the light is blinking, replace the battery.",
          "Wait twenty seconds.",
          "Note: this action clears the saved settings."], 1),
        (["If the filter is dirty, rinse the filter.",
          "Shake off the water.", "Dry it fully.",
          "Important: never use a heater to dry the filter."], 2),
        (["When the error returns, reinstall the driver.",
          "Reboot once.",
          "Tip: keep the old installer around."], 1),
        (["If the latch jams, press the release pin.",
          "Slide the tray out.",
          "Note: the pin sits behind the left rail."], 1),
        (["If the signal drops, move the antenna.",
          "Retest the signal.",
          "Information: walls weaken the signal noticeably."], 1),
        (["Unless the backup is current, run a manual backup.",
          "Verify the archive size.",
          "Note: the first backup takes longer."], 1),
    ]
    for i, (sents, n_members) in enumerate(note_specs):
        cases.append(_case(
            f"note_{i}",
            steps=[sents, ["Continue with the checklist."]],
            decision=(0, 0),
            expected={(0, k) for k in range(1, 1 + n_members)},
            needs_rule="note"))

    # --- structure rule: paragraph boundary ends the block ---------------
    structure_specs = [
        (["If the LEDs do not show a fault, power off both supplies.",
          "Wait twenty seconds.",
          "If both canisters still report the error, replace the chassis."],
         [2], 1),
        (["If the drive rattles, back up the data now.",
          "Order a replacement drive.",
          "Mount the new drive in the same bay."], [2], 1),
        (["When the console beeps, note the beep pattern.",
          "Look up the pattern in the manual.",
          "The rear panel houses the speaker."], [2], 1),
        (["If the gauge reads high, release the pressure.",
          "Close the valve slowly.",
          "Inspect the gasket for wear.",
          "Schedule a full service."], [3], 2),
        (["If the app crashes, clear the app cache.",
          "Sign in again.",
          "Collect the crash report from the diagnostics screen."], [2], 1),
        (["Unless the firmware is current, download the update.",
          "Apply the update.",
          "The release notes list the fixed defects."], [2], 1),
    ]
    for i, (sents, breaks, n_members) in enumerate(structure_specs):
        cases.append(_case(
            f"structure_{i}",
            steps=[sents, ["Move on to the final checks."]],
            decision=(0, 0),
            expected={(0, k) for k in range(1, 1 + n_members)},
            needs_rule="structure", breaks={0: breaks}))

    # --- overlap rule: parallel conditional opens the next step ----------
    overlap_specs = [
        ("If the slot status is missing, switch the slot off.",
         ["If the slot status is failed, restart the node.",
          "Record the slot number."]),
        ("If the status light is red, replace the supply.",
         ["If the status light is yellow, reseat the supply.",
          "Watch the light for one minute."]),
        ("If the door is open, close the door.",
         ["If the door is blocked, remove the obstruction.",
          "Test the door switch."]),
        ("If the fan does not spin, replace the fan.",
         ["If the fan does not start, check the fan cable.",
          "Listen for bearing noise."]),
    ]
    for i, (first, nxt) in enumerate(overlap_specs):
        cases.append(_case(
            f"overlap_{i}",
            steps=[["Inspect the status screen.", first], nxt,
                   ["Close the service panel."]],
            decision=(0, 1),
            expected={(1, k) for k in range(len(nxt))},
            needs_rule="overlap"))

    # --- else cue: trailing member joins the FALSE branch ----------------
    else_specs = [
        (["If the light is blinking, replace the battery.",
          "Wait twenty seconds.",
          "Otherwise, continue to the next step."], 2),
        (["If the test passes, archive the results.",
          "Otherwise, repeat the calibration."], 1),
        (["When the parts match, assemble the housing.",
          "Torque the screws evenly.",
          "Else, request the correct parts."], 2),
        (["If the login works, remove the temporary account.",
          "Otherwise, reset the directory service."], 1),
    ]
    for i, (sents, n_members) in enumerate(else_specs):
        cases.append(_case(
            f"else_{i}",
            steps=[sents, ["Record the outcome."]],
            decision=(0, 0),
            expected={(0, k) for k in range(1, 1 + n_members)},
            needs_rule="none"))

    assert len(cases) == 44, len(cases)
    return cases
