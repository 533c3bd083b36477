//-----
//
// File: InformationDefinitions.h
//
// Description:
//
// Supporting classes from the "intelligent agent cognition" and
// communication areas, plus a base class for earthbound objects.
// These serve as structural placeholders: each carries only the
// state attribute types that the behavior classes read and write.
//
//-----

#include <EverydayObjectDefinitions.h>

//-----
//
// EarthBoundObjectFrameClass
//
//-----
//
ObjectFrameClass "EarthBoundObjectFrameClass"
(
  // (provides orientation specifiers, e.g. "above", "below")
  <StructureTrait val = "Compound"/>

  Dictionary ( English ( { "nil" } ) );

  HigherClasses ();

  StructuralParentClassesBase
  (
    { "EverydayObjectStructuralParentClass" }
  );
);

//-----
//
// CognitiveRepresentationOfHarmfulEvent
//
//-----
//
ObjectFrameClass "CognitiveRepresentationOfHarmfulEvent"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English ( { "nil" } ) );

  HigherClasses ();

  StructuralParentClassesBase
  (
    { "EverydayObjectStructuralParentClass" }
  );

  AttributeTypes
  (
    AttributeType "PassiveIsAnticipatedState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />

      "Values"
      (
        { "NotAnticipated",
          "Anticipated" }
      );
    );
  );
);

//-----
//
// CognitiveRepresentationOfScheduleConflict
//
//-----
//
ObjectFrameClass "CognitiveRepresentationOfScheduleConflict"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English ( { "nil" } ) );

  HigherClasses ();

  StructuralParentClassesBase
  (
    { "EverydayObjectStructuralParentClass" }
  );

  AttributeTypes
  (
    AttributeType "PassiveIsAnticipatedState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />

      "Values"
      (
        { "NotAnticipated",
          "Anticipated" }
      );
    );
  );
);

//-----
//
// CommunicationUnitRequestObjectFrameClass
//
//-----
//
ObjectFrameClass "CommunicationUnitRequestObjectFrameClass"
(
  // (e.g. a request for a permit)
  <StructureTrait val = "Compound"/>

  Dictionary ( English ( { "request", "requests" } ) );

  HigherClasses ();

  StructuralParentClassesBase
  (
    { "EverydayObjectStructuralParentClass" }
  );

  AttributeTypes
  (
    AttributeType "PassiveRepresentedItemsRefusedState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />

      "Values"
      (
        { "NotRefused",
          "Refused" }
      );
    );
  );
);

//-----
//
// CommunicationUnitProposedActionObjectFrameClass
//
//-----
//
ObjectFrameClass "CommunicationUnitProposedActionObjectFrameClass"
(
  // (e.g. a proposal to do violence)
  <StructureTrait val = "Compound"/>

  Dictionary ( English ( { "nil" } ) );

  HigherClasses ();

  StructuralParentClassesBase
  (
    { "EverydayObjectStructuralParentClass" }
  );

  AttributeTypes
  (
    AttributeType "PassiveIsCommunicatedState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />

      "Values"
      (
        { "NotCommunicated",
          "Communicated" }
      );
    );
  );
);
