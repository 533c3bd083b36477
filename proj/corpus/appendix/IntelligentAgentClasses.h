//-----
//
// File: IntelligentAgentClasses.h
//
// Description:
//
// Object frame classes for intelligent agents: the generic
// IntelligentAgent and Person classes, and the lower-ontology
// classes for government subjects and officials.
//
//-----

#include <EverydayObjectDefinitions.h>
#include <InformationDefinitions.h>

//-----
//
// IntelligentAgentObjectFrameClass
//
//-----
//
ObjectFrameClass "IntelligentAgentObjectFrameClass"
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
    AttributeType "CommunicatingState"
    (
      <SuperType val = "Qualitative"/>
      "Values"
      (
        { "Communicating",
          "CommunicatingCompleted" }
      );
    );
    AttributeType "CommunicationReceivedState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />

      "Values"
      (
        { "NotCommunicationReceived",
          "CommunicationReceived" }
      );
    );
    AttributeType "AnticipatingHarmfulEventState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />
      <OptionalCausalFeature val = "true" />

      "Values"
      (
        { "NotAnticipating",
          "Anticipating" }
      );
    );
    AttributeType "AnticipatingScheduleConflictState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />
      <OptionalCausalFeature val = "true" />

      "Values"
      (
        { "NotAnticipating",
          "Anticipating" }
      );
    );
  );
); // IntelligentAgentObjectFrameClass

//-----
//
// PersonObjectFrameClass
//
//-----
//
ObjectFrameClass "PersonObjectFrameClass"
(
    <StructureTrait val = "Compound"/>

    Dictionary
    (
        English
        (
            {
                "person",
                "persons",
                "human",
                "humans"
            }
        );
    );

    HigherClasses
    (
        { "EverydayObjectFrameClass",
          "IntelligentAgentObjectFrameClass",
          "EarthBoundObjectFrameClass" } // provides orientation specifiers, e.g. "above", "below"
    );

    AttributeTypes
    (
        AttributeType "RequestingState"
        (
            <SuperType val = "Qualitative"/>
            <StateAttributeType val = "true"/>

            "Values"
            (
              { "NotRequesting",
                "Requesting" }
            );
        );

        AttributeType "PassiveIsRequestedFromState"
        (
            <SuperType val = "Qualitative"/>
            <StateAttributeType val = "true"/>

            "Values"
            (
              { "NotRequestedFrom",
                "RequestedFrom" }
            );
        );

        AttributeType "RefusingState"
        (
            <SuperType val = "Qualitative"/>
            <StateAttributeType val = "true"/>

            "Values"
            (
              { "NotRefusing",
                "Refusing" }
            );
        );

        AttributeType "PassiveIsRefusedState"
        (
            <SuperType val = "Qualitative"/>
            <StateAttributeType val = "true"/>

            "Values"
            (
              { "NotRefused",
                "Refused" }
            );
        );

    ); // AttributeTypes

); // ObjectFrameClass "PersonObjectFrameClass"

//-----
//
// Lower-ontology classes
//
//-----
//
ObjectFrameClass "GovernmentSubjectObjectFrameClass"
(
  // (generated from) "A government subject is a person."

  <StructureTrait val = "Compound"/>

  DictionaryPriorWord
  (
    <DictionaryWordsIsNoun val = "true" />

    English
    (
      { "government",
        "government" }
    );
  );

  Dictionary ( English
  (
    { "subject",
      "subjects" }
  ););

  HigherClasses ( { "PersonObjectFrameClass" } );

);

ObjectFrameClass "GovernmentOfficialObjectFrameClass"
(
  // (generated from) "A government official is a person."
  // (generated from) "A government official can grant a request."

  <StructureTrait val = "Compound"/>

  DictionaryPriorWord
  (
    <DictionaryWordsIsNoun val = "true" />

    English
    (
      { "government",
        "government" }
    );
  );

  Dictionary ( English
  (
    { "official",
      "officials" }
  ););

  HigherClasses ( { "PersonObjectFrameClass" } );

  AttributeTypes
  (
    AttributeType "GrantingState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />

      "Values"
      (
        { "NotGranting",
          "Granting" }
      );
    );
  );
);

ObjectFrameClass "CityCouncilmanObjectFrameClass"
(
    // (generated from) "A city councilman is a government official."

    <StructureTrait val = "Compound"/>

    DictionaryPriorWord
    (
        <DictionaryWordIsNoun val = "true" />

        English
        (
            { "city",
              "city" }
        );
    );

    Dictionary ( English
    (
        { "councilman",
          "councilmen" }
    ););

    HigherClasses ( { "GovernmentOfficialObjectFrameClass" } );
);

ObjectFrameClass "DemonstratorObjectFrameClass"
(
    // (generated from) "A demonstrator is a person."

    <StructureTrait val = "Compound"/>

    Dictionary ( English
    (
        { "demonstrator",
          "demonstrators" }
    ););

    HigherClasses ( { "GovernmentSubjectObjectFrameClass" } );
);
